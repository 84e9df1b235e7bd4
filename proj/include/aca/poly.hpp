#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "aca/scalar.hpp"

namespace aca {

using Exponents = std::vector<std::uint32_t>;

// graded lexicographic: total degree first, then lex on the exponent vector
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over a fixed ordered variable list.
// No zero coefficients are ever stored; term order is graded lex.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero over Q with no variables
  MultiPoly(Field f, std::vector<std::string> vars);

  static MultiPoly constant(Field f, std::vector<std::string> vars, const Scalar& c);
  static MultiPoly variable(Field f, std::vector<std::string> vars, std::size_t index);

  const Field& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  const std::map<Exponents, Scalar, GrlexLess>& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly pow(std::uint32_t e) const;
  bool operator==(const MultiPoly& o) const;

  Scalar eval(std::span<const Scalar> point) const;

  // Exact composition: one replacement polynomial per variable, all over a
  // common target variable list.  eval commutes with substitute.
  MultiPoly substitute(std::span<const MultiPoly> assignment) const;

  // Same terms over a new variable list; old variable i becomes new_index[i].
  MultiPoly rename_vars(const std::vector<std::size_t>& new_index,
                        std::vector<std::string> new_vars) const;

  void add_term(const Exponents& e, const Scalar& c);
  std::string str() const;

 private:
  Field field_;
  std::vector<std::string> vars_;
  std::map<Exponents, Scalar, GrlexLess> terms_;

  void check_compatible(const MultiPoly& o) const;
};

// Unique polynomial with per-variable degree < p agreeing with `values`
// on all of F_p^k.  values[i] is the entry at the little-endian base-p
// tuple i (coordinate 0 is the least significant digit).
MultiPoly interpolate_table(const Field& f, std::vector<std::string> vars,
                            const std::vector<Scalar>& values);

// Dense univariate polynomial; leading coefficient nonzero unless zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(Field f, std::vector<Scalar> coeffs);  // coeffs[i] multiplies t^i

  static UniPoly zero(const Field& f) { return UniPoly(f, {}); }

  const Field& field() const { return field_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Scalar eval(const Scalar& x) const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  std::string str(const std::string& var = "t") const;

 private:
  Field field_;
  std::vector<Scalar> coeffs_;
  void trim();
};

// Exactly the rational roots of a nonzero p over Q (rational root theorem
// applied to the integer-cleared primitive part).
std::set<Scalar> rational_roots(const UniPoly& p);

struct PolyParseError : std::runtime_error {
  std::size_t pos;  // byte offset into the expression
  PolyParseError(std::size_t at, const std::string& msg)
      : std::runtime_error(msg), pos(at) {}
};

// Recursive-descent parser for the polynomial expression grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := variable | integer | '(' expr ')'
// Whitespace-insensitive; variables must come from `vars`.
MultiPoly parse_poly(const std::string& text, const Field& f,
                     const std::vector<std::string>& vars);

}  // namespace aca
