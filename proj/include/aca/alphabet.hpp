#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aca/poly.hpp"
#include "aca/scalar.hpp"

namespace aca {

// A letter of an alphabet: a coordinate tuple for variety backends, a
// symbol index for table backends.
struct Point {
  std::vector<Scalar> coords;
  std::size_t symbol = SIZE_MAX;

  bool operator==(const Point& o) const { return coords == o.coords && symbol == o.symbol; }
  bool operator<(const Point& o) const {
    if (symbol != o.symbol) return symbol < o.symbol;
    return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(),
                                        o.coords.end());
  }
};

enum class AlphabetKind { Enumerated, Table, RationalAffine };

// Point set of an affine variety (enumerated over F_p or symbolic over Q),
// or an opaque finite symbol list.  Immutable after construction.
class Alphabet {
 public:
  // all points of F_p^n vanishing on every equation; throws when p^n
  // exceeds the enumeration cap
  static Alphabet enumerated(const Field& f, std::size_t ambient_dim,
                             std::vector<MultiPoly> equations,
                             std::uint64_t cap = 1'000'000);
  static Alphabet table(std::vector<std::string> symbols);
  static Alphabet rational_affine(std::size_t ambient_dim, std::vector<MultiPoly> equations);

  AlphabetKind kind() const { return kind_; }
  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }  // ambient dimension (0 for tables)
  bool finite() const { return kind_ != AlphabetKind::RationalAffine; }
  std::size_t size() const;
  const std::vector<MultiPoly>& equations() const { return equations_; }
  const std::vector<std::string>& symbols() const { return symbols_; }

  Point point(std::size_t i) const;
  std::optional<std::size_t> index_of(const Point& p) const;
  bool contains(const Point& p) const;
  std::string point_str(const Point& p) const;
  Point parse_point(const std::string& text) const;

  bool operator==(const Alphabet& o) const;

 private:
  AlphabetKind kind_ = AlphabetKind::Table;
  Field field_;
  std::size_t dim_ = 0;
  std::vector<MultiPoly> equations_;       // over vars x0..x{n-1}
  std::vector<std::string> symbols_;       // table backend
  std::vector<std::vector<Scalar>> points_;  // enumerated backend, sorted
};

std::vector<std::string> ambient_vars(std::size_t dim);

struct MapCheckResult {
  bool ok = true;
  bool exhaustive = false;  // false: sampled (rational backend)
  std::uint64_t cases = 0;
  std::optional<std::vector<Point>> counterexample;
};

// Local map A^arity -> A: either componentwise polynomials in the variables
// x<m>_<i> (memory position m, coordinate i), or an explicit value table.
// Finite backends are verified exhaustively at construction: every output
// must satisfy the codomain equations.
class RegularMap {
 public:
  static RegularMap polynomial(Alphabet domain, std::size_t arity, std::vector<MultiPoly> body);
  // entries indexed little-endian by memory position: index of args (a0..ak)
  // is sum a_i * |A|^i
  static RegularMap table_map(Alphabet alphabet, std::size_t arity, std::vector<std::size_t> entries);

  const Alphabet& alphabet() const { return *alphabet_; }
  std::size_t arity() const { return arity_; }
  bool is_polynomial() const { return !body_.empty() || (arity_ >= 0 && entries_.empty() && alphabet_->kind() != AlphabetKind::Table); }
  const std::vector<MultiPoly>& body() const { return body_; }
  const std::vector<std::size_t>& entries() const { return entries_; }

  Point apply(std::span<const Point> args) const;
  std::size_t apply_indices(std::span<const std::size_t> args) const;  // finite backends

  MapCheckResult check(std::span<const Point> witness_samples = {}) const;
  MapCheckResult last_check() const { return check_; }

  static std::vector<std::string> rule_vars(std::size_t arity, std::size_t dim);

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::size_t arity_ = 0;
  std::vector<MultiPoly> body_;
  std::vector<std::size_t> entries_;
  MapCheckResult check_;
};

// enumeration order helper: the tuple encoded by idx over `width` slots of
// a finite alphabet, little-endian
std::vector<std::size_t> decode_tuple(std::uint64_t idx, std::size_t base, std::size_t width);
std::uint64_t tuple_count(std::size_t base, std::size_t width, std::uint64_t cap);

}  // namespace aca
