#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aca {

using Coord = std::int64_t;

// Element of Z^d (an integer vector) or of a finite group (a single-entry
// vector holding the element index).
struct GroupElement {
  std::vector<Coord> v;

  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return v < o.v; }  // lex
};

// Group universe: free abelian Z^d, or a finite group given by its
// multiplication table.  Finite tables are validated exhaustively
// (associativity, two-sided identity, inverses).
class Group {
 public:
  static Group free_abelian(std::size_t rank);
  static Group finite(std::vector<std::string> names,
                      std::vector<std::vector<std::size_t>> table,
                      std::size_t identity_index);

  bool free() const { return finite_order_ == 0; }
  std::size_t rank() const { return rank_; }          // free case
  std::size_t order() const { return finite_order_; }  // finite case

  GroupElement identity() const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  bool valid_element(const GroupElement& a) const;

  const std::vector<std::string>& element_names() const { return names_; }
  std::size_t identity_index() const { return identity_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::optional<std::size_t> element_by_name(const std::string& name) const;

  std::string elem_str(const GroupElement& a) const;
  bool operator==(const Group& o) const;

 private:
  std::size_t rank_ = 0;          // Z^d
  std::size_t finite_order_ = 0;  // 0 means free abelian
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

// Ordered duplicate-free element list; canonical order is lexicographic on
// integer vectors (index order for finite groups).
class FiniteSubset {
 public:
  FiniteSubset() = default;
  FiniteSubset(const Group& g, std::vector<GroupElement> elems);  // sorts + dedups

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<GroupElement>& elements() const { return elems_; }
  bool contains(const GroupElement& e) const;
  std::optional<std::size_t> index_of(const GroupElement& e) const;
  bool operator==(const FiniteSubset&) const = default;

 private:
  std::vector<GroupElement> elems_;
};

FiniteSubset product_set(const FiniteSubset& s, const FiniteSubset& t, const Group& g);

// interior(omega, m) = {g : g*m inside omega for all m in M}; for the empty
// memory set the window itself is returned (a value at g then depends on
// nothing, so every g of the window is determined).
FiniteSubset interior(const FiniteSubset& omega, const FiniteSubset& m, const Group& g);

// Finite-index subgroup: a full-rank sublattice of Z^d held as its column
// Hermite normal form (upper triangular, positive diagonal, entries right of
// the diagonal reduced modulo it), or a subgroup of a finite group held as a
// sorted element-index set.
class Subgroup {
 public:
  static Subgroup lattice(const Group& g, std::vector<std::vector<Coord>> basis_columns);
  static Subgroup diagonal_lattice(const Group& g, Coord k);
  static Subgroup finite_subgroup(const Group& g, std::vector<std::size_t> elems);

  bool is_lattice() const { return !hnf_.empty(); }
  const std::vector<std::vector<Coord>>& hnf() const { return hnf_; }  // hnf_[r][c]
  const std::vector<std::size_t>& members() const { return members_; }

  std::int64_t index(const Group& g) const;
  bool contains(const Group& g, const GroupElement& e) const;
  // integer coordinates of e in the lattice basis, when e lies in the lattice
  std::optional<std::vector<Coord>> lattice_coordinates(const GroupElement& e) const;
  std::string str(const Group& g) const;
  bool operator==(const Subgroup&) const = default;

 private:
  std::vector<std::vector<Coord>> hnf_;  // d x d, lattice case
  std::vector<std::size_t> members_;     // finite case, sorted
};

// column-style Hermite normal form of a nonsingular integer matrix
std::vector<std::vector<Coord>> hermite_normal_form(std::vector<std::vector<Coord>> m);

// Right cosets H\G with ordered representatives; the identity's coset is
// always index 0.  Lattice representatives are the canonical HNF box by
// default; `centered` picks the per-axis centered box instead (used where
// memory sets must be able to grow in every direction).
class CosetSpace {
 public:
  CosetSpace(const Group& g, Subgroup h, bool centered = false);

  const Group& group() const { return *group_; }
  const Subgroup& subgroup() const { return subgroup_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<GroupElement>& representatives() const { return reps_; }
  std::size_t reduce(const GroupElement& e) const;  // total on the group

 private:
  const Group* group_;
  Subgroup subgroup_;
  bool centered_ = false;
  std::vector<GroupElement> reps_;
  std::vector<std::size_t> finite_reduce_;  // finite groups: element -> rep index

  GroupElement reduce_lattice(const GroupElement& e) const;
};

// Smallest-index subgroup (within the schedule) whose cosets separate the
// given elements: a quick diagonal-lattice pass establishes an upper bound,
// then lattices are enumerated by increasing index for anything smaller.
Subgroup separating_subgroup(const FiniteSubset& n, const Group& g, std::int64_t index_bound);

// Deterministic subgroup schedule used by the scans: diagonal lattices
// first, then the remaining HNF lattices by increasing index (for finite
// groups: all subgroups by increasing index).
std::vector<Subgroup> subgroup_schedule(const Group& g, std::int64_t index_bound);

// all subgroups of a finite group, by brute-force closure
std::vector<std::vector<std::size_t>> finite_subgroups(const Group& g);

}  // namespace aca
