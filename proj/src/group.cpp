#include "aca/group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace aca {

Group Group::free_abelian(std::size_t rank) {
  if (rank == 0) throw std::invalid_argument("free abelian rank must be >= 1");
  Group g;
  g.rank_ = rank;
  return g;
}

Group Group::finite(std::vector<std::string> names,
                    std::vector<std::vector<std::size_t>> table,
                    std::size_t identity_index) {
  const std::size_t n = names.size();
  if (n == 0) throw std::invalid_argument("finite group needs at least one element");
  if (table.size() != n) throw std::invalid_argument("multiplication table has wrong row count");
  for (auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("multiplication table has a ragged row");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("multiplication table entry out of range");
  }
  if (identity_index >= n) throw std::invalid_argument("identity index out of range");
  for (std::size_t i = 0; i < n; ++i)
    if (table[identity_index][i] != i || table[i][identity_index] != i)
      throw std::invalid_argument("identity element fails e*g = g*e = g");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw std::invalid_argument("multiplication table is not associative");

  Group g;
  g.finite_order_ = n;
  g.names_ = std::move(names);
  g.table_ = std::move(table);
  g.identity_ = identity_index;
  g.inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.table_[a][b] == identity_index && g.table_[b][a] == identity_index) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] == n) throw std::invalid_argument("element without a two-sided inverse");
  }
  return g;
}

GroupElement Group::identity() const {
  if (free()) return GroupElement{std::vector<Coord>(rank_, 0)};
  return GroupElement{{static_cast<Coord>(identity_)}};
}

bool Group::valid_element(const GroupElement& a) const {
  if (free()) return a.v.size() == rank_;
  return a.v.size() == 1 && a.v[0] >= 0 && static_cast<std::size_t>(a.v[0]) < finite_order_;
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  if (!valid_element(a) || !valid_element(b)) throw std::invalid_argument("element/group mismatch");
  if (free()) {
    GroupElement r = a;
    for (std::size_t i = 0; i < rank_; ++i) r.v[i] += b.v[i];
    return r;
  }
  return GroupElement{{static_cast<Coord>(table_[a.v[0]][b.v[0]])}};
}

GroupElement Group::inv(const GroupElement& a) const {
  if (!valid_element(a)) throw std::invalid_argument("element/group mismatch");
  if (free()) {
    GroupElement r = a;
    for (auto& x : r.v) x = -x;
    return r;
  }
  return GroupElement{{static_cast<Coord>(inverse_[a.v[0]])}};
}

std::optional<std::size_t> Group::element_by_name(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string Group::elem_str(const GroupElement& a) const {
  if (!free()) return names_[static_cast<std::size_t>(a.v[0])];
  std::ostringstream out;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    if (i) out << ",";
    out << a.v[i];
  }
  return out.str();
}

bool Group::operator==(const Group& o) const {
  return rank_ == o.rank_ && finite_order_ == o.finite_order_ && table_ == o.table_ &&
         identity_ == o.identity_;
}

FiniteSubset::FiniteSubset(const Group& g, std::vector<GroupElement> elems) {
  for (auto& e : elems)
    if (!g.valid_element(e)) throw std::invalid_argument("subset element does not belong to the group");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  elems_ = std::move(elems);
}

bool FiniteSubset::contains(const GroupElement& e) const {
  return std::binary_search(elems_.begin(), elems_.end(), e);
}

std::optional<std::size_t> FiniteSubset::index_of(const GroupElement& e) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
  if (it == elems_.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - elems_.begin());
}

FiniteSubset product_set(const FiniteSubset& s, const FiniteSubset& t, const Group& g) {
  std::vector<GroupElement> out;
  out.reserve(s.size() * t.size());
  for (auto& a : s.elements())
    for (auto& b : t.elements()) out.push_back(g.mul(a, b));
  return FiniteSubset(g, std::move(out));
}

FiniteSubset interior(const FiniteSubset& omega, const FiniteSubset& m, const Group& g) {
  if (m.empty()) return omega;
  // every qualifying g lies in omega * m0^{-1} for the first memory element
  GroupElement m0_inv = g.inv(m[0]);
  std::vector<GroupElement> out;
  for (auto& w : omega.elements()) {
    GroupElement cand = g.mul(w, m0_inv);
    bool all = true;
    for (auto& h : m.elements())
      if (!omega.contains(g.mul(cand, h))) {
        all = false;
        break;
      }
    if (all) out.push_back(cand);
  }
  return FiniteSubset(g, std::move(out));
}

namespace {

Coord floor_div(Coord a, Coord b) {
  Coord q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

std::vector<std::vector<Coord>> hermite_normal_form(std::vector<std::vector<Coord>> m) {
  const std::size_t d = m.size();
  for (auto& row : m)
    if (row.size() != d) throw std::invalid_argument("HNF needs a square matrix");

  // column operations only; work bottom row upward so the result is upper
  // triangular with positive diagonal
  for (std::size_t j = d; j-- > 0;) {
    // gcd step among columns 0..j on row j
    for (;;) {
      std::size_t nonzero = j + 1;
      for (std::size_t c = 0; c <= j; ++c)
        if (m[j][c] != 0 && (nonzero == j + 1 || std::llabs(m[j][c]) < std::llabs(m[j][nonzero])))
          nonzero = c;
      if (nonzero == j + 1) throw std::invalid_argument("singular basis matrix");
      if (nonzero != j)
        for (std::size_t r = 0; r < d; ++r) std::swap(m[r][nonzero], m[r][j]);
      bool done = true;
      for (std::size_t c = 0; c <= j; ++c) {
        if (c == j || m[j][c] == 0) continue;
        Coord q = floor_div(m[j][c], m[j][j]);
        for (std::size_t r = 0; r < d; ++r) m[r][c] -= q * m[r][j];
        if (m[j][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[j][j] < 0)
      for (std::size_t r = 0; r < d; ++r) m[r][j] = -m[r][j];
    // reduce the entries right of the diagonal in row j
    for (std::size_t c = j + 1; c < d; ++c) {
      Coord q = floor_div(m[j][c], m[j][j]);
      if (q != 0)
        for (std::size_t r = 0; r < d; ++r) m[r][c] -= q * m[r][j];
    }
  }
  return m;
}

Subgroup Subgroup::lattice(const Group& g, std::vector<std::vector<Coord>> basis_columns) {
  if (!g.free()) throw std::invalid_argument("lattice subgroup over a free abelian group only");
  if (basis_columns.size() != g.rank()) throw std::invalid_argument("basis rank mismatch");
  Subgroup h;
  h.hnf_ = hermite_normal_form(std::move(basis_columns));
  return h;
}

Subgroup Subgroup::diagonal_lattice(const Group& g, Coord k) {
  if (k <= 0) throw std::invalid_argument("diagonal lattice needs k >= 1");
  std::vector<std::vector<Coord>> m(g.rank(), std::vector<Coord>(g.rank(), 0));
  for (std::size_t i = 0; i < g.rank(); ++i) m[i][i] = k;
  return lattice(g, std::move(m));
}

Subgroup Subgroup::finite_subgroup(const Group& g, std::vector<std::size_t> elems) {
  if (g.free()) throw std::invalid_argument("element-set subgroup of a finite group only");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw std::invalid_argument("subgroup cannot be empty");
  auto in = [&](std::size_t x) { return std::binary_search(elems.begin(), elems.end(), x); };
  if (!in(g.identity_index())) throw std::invalid_argument("subgroup must contain the identity");
  for (auto a : elems) {
    for (auto b : elems)
      if (!in(g.table()[a][b])) throw std::invalid_argument("subgroup not closed under multiplication");
  }
  if (g.order() % elems.size() != 0) throw std::invalid_argument("subgroup size must divide the order");
  Subgroup h;
  h.members_ = std::move(elems);
  return h;
}

std::int64_t Subgroup::index(const Group& g) const {
  if (is_lattice()) {
    // |det| of an upper-triangular HNF is the diagonal product
    std::int64_t det = 1;
    for (std::size_t i = 0; i < hnf_.size(); ++i) det *= hnf_[i][i];
    return det;
  }
  return static_cast<std::int64_t>(g.order() / members_.size());
}

std::optional<std::vector<Coord>> Subgroup::lattice_coordinates(const GroupElement& e) const {
  const std::size_t d = hnf_.size();
  if (e.v.size() != d) return std::nullopt;
  std::vector<Coord> x(d, 0), rem = e.v;
  for (std::size_t j = d; j-- > 0;) {
    if (rem[j] % hnf_[j][j] != 0) return std::nullopt;
    x[j] = rem[j] / hnf_[j][j];
    for (std::size_t r = 0; r < d; ++r) rem[r] -= x[j] * hnf_[r][j];
  }
  for (auto r : rem)
    if (r != 0) return std::nullopt;
  return x;
}

bool Subgroup::contains(const Group& g, const GroupElement& e) const {
  if (is_lattice()) return lattice_coordinates(e).has_value();
  (void)g;
  return std::binary_search(members_.begin(), members_.end(),
                            static_cast<std::size_t>(e.v[0]));
}

std::string Subgroup::str(const Group& g) const {
  std::ostringstream out;
  if (is_lattice()) {
    out << "lattice[";
    for (std::size_t c = 0; c < hnf_.size(); ++c) {
      if (c) out << ";";
      for (std::size_t r = 0; r < hnf_.size(); ++r) {
        if (r) out << ",";
        out << hnf_[r][c];
      }
    }
    out << "]";
  } else {
    out << "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (i) out << ",";
      out << g.element_names()[members_[i]];
    }
    out << "}";
  }
  return out.str();
}

CosetSpace::CosetSpace(const Group& g, Subgroup h, bool centered)
    : group_(&g), subgroup_(std::move(h)), centered_(centered) {
  if (g.free()) {
    if (!subgroup_.is_lattice()) throw std::invalid_argument("lattice subgroup expected");
    const auto& hnf = subgroup_.hnf();
    const std::size_t d = hnf.size();
    std::vector<Coord> lo(d, 0);
    if (centered_)
      for (std::size_t i = 0; i < d; ++i) lo[i] = -(hnf[i][i] / 2);
    // canonical box enumeration, lex order; identity's coset first
    std::vector<GroupElement> reps;
    std::vector<Coord> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = lo[i];
    for (;;) {
      reps.push_back(GroupElement{v});
      std::size_t i = d;
      while (i-- > 0) {
        if (++v[i] < lo[i] + hnf[i][i]) break;
        v[i] = lo[i];
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
    std::sort(reps.begin(), reps.end());
    GroupElement id = g.identity();
    auto it = std::find(reps.begin(), reps.end(), id);
    if (it == reps.end()) throw std::logic_error("identity missing from the representative box");
    std::rotate(reps.begin(), it, it + 1);
    reps_ = std::move(reps);
  } else {
    if (subgroup_.is_lattice()) throw std::invalid_argument("element-set subgroup expected");
    const auto& mem = subgroup_.members();
    const std::size_t n = g.order();
    finite_reduce_.assign(n, SIZE_MAX);
    // identity's coset (= H itself) first, remaining cosets by least element
    std::vector<std::size_t> order;
    order.push_back(g.identity_index());
    for (std::size_t e = 0; e < n; ++e) order.push_back(e);
    for (auto e : order) {
      if (finite_reduce_[e] != SIZE_MAX) continue;
      std::size_t rep_idx = reps_.size();
      reps_.push_back(GroupElement{{static_cast<Coord>(e)}});
      for (auto m : mem) finite_reduce_[g.table()[m][e]] = rep_idx;  // coset H*e
    }
  }
}

GroupElement CosetSpace::reduce_lattice(const GroupElement& e) const {
  const auto& hnf = subgroup_.hnf();
  const std::size_t d = hnf.size();
  std::vector<Coord> v = e.v;
  for (std::size_t j = d; j-- > 0;) {
    Coord lo = centered_ ? -(hnf[j][j] / 2) : 0;
    Coord q = floor_div(v[j] - lo, hnf[j][j]);
    if (q != 0)
      for (std::size_t r = 0; r < d; ++r) v[r] -= q * hnf[r][j];
  }
  return GroupElement{v};
}

std::size_t CosetSpace::reduce(const GroupElement& e) const {
  if (!group_->valid_element(e)) throw std::invalid_argument("element/group mismatch");
  if (group_->free()) {
    GroupElement r = reduce_lattice(e);
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (reps_[i] == r) return i;
    throw std::logic_error("reduced element not among representatives");
  }
  return finite_reduce_[static_cast<std::size_t>(e.v[0])];
}

namespace {

bool separates(const CosetSpace& cs, const FiniteSubset& n) {
  std::set<std::size_t> seen;
  for (auto& e : n.elements())
    if (!seen.insert(cs.reduce(e)).second) return false;
  return true;
}

// all upper-triangular HNF matrices with the given diagonal product
void enumerate_hnf(std::size_t d, std::int64_t index,
                   std::vector<std::vector<Coord>>& work,
                   std::vector<Coord>& diag, std::size_t at,
                   std::vector<std::vector<std::vector<Coord>>>& out) {
  if (at == d) {
    std::vector<std::vector<Coord>> m(d, std::vector<Coord>(d, 0));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = diag[i];
    // fill entries right of the diagonal, row-major, each in [0, diag[row])
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = r + 1; c < d; ++c) slots.emplace_back(r, c);
    std::vector<Coord> vals(slots.size(), 0);
    for (;;) {
      for (std::size_t s = 0; s < slots.size(); ++s) m[slots[s].first][slots[s].second] = vals[s];
      out.push_back(m);
      std::size_t s = slots.size();
      while (s-- > 0) {
        if (++vals[s] < diag[slots[s].first]) break;
        vals[s] = 0;
        if (s == 0) {
          s = SIZE_MAX;
          break;
        }
      }
      if (s == SIZE_MAX || slots.empty()) break;
    }
    return;
  }
  for (std::int64_t f = 1; f <= index; ++f) {
    if (index % f != 0) continue;
    diag[at] = f;
    enumerate_hnf(d, index / f, work, diag, at + 1, out);
  }
}

std::vector<Subgroup> lattices_of_index(const Group& g, std::int64_t index) {
  std::vector<std::vector<std::vector<Coord>>> mats;
  std::vector<std::vector<Coord>> work;
  std::vector<Coord> diag(g.rank(), 1);
  enumerate_hnf(g.rank(), index, work, diag, 0, mats);
  std::vector<Subgroup> out;
  std::set<std::vector<std::vector<Coord>>> seen;
  for (auto& m : mats) {
    auto h = hermite_normal_form(m);
    if (seen.insert(h).second) out.push_back(Subgroup::lattice(g, h));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> finite_subgroups(const Group& g) {
  const auto& t = g.table();
  auto closure = [&](std::vector<std::size_t> gen) {
    std::set<std::size_t> s(gen.begin(), gen.end());
    s.insert(g.identity_index());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::size_t> cur(s.begin(), s.end());
      for (auto a : cur)
        for (auto b : cur)
          if (s.insert(t[a][b]).second) grew = true;
    }
    return std::vector<std::size_t>(s.begin(), s.end());
  };
  std::set<std::vector<std::size_t>> found;
  found.insert(closure({}));
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = found;
    for (auto& h : snapshot)
      for (std::size_t e = 0; e < g.order(); ++e) {
        if (std::binary_search(h.begin(), h.end(), e)) continue;
        auto gen = h;
        gen.push_back(e);
        if (found.insert(closure(gen)).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

Subgroup separating_subgroup(const FiniteSubset& n, const Group& g, std::int64_t index_bound) {
  if (n.empty()) throw std::invalid_argument("cannot separate an empty set");
  if (g.free()) {
    // diagonal pass: k beyond twice the coordinate spread always separates
    Coord spread = 0;
    for (auto& a : n.elements())
      for (auto& b : n.elements())
        for (std::size_t i = 0; i < g.rank(); ++i)
          spread = std::max(spread, std::llabs(a.v[i] - b.v[i]));
    std::optional<Subgroup> best;
    std::int64_t best_index = 0;
    for (Coord k = 1; k <= 2 * spread + 1; ++k) {
      Subgroup h = Subgroup::diagonal_lattice(g, k);
      if (separates(CosetSpace(g, h), n)) {
        best = h;
        best_index = h.index(g);
        break;
      }
    }
    if (!best) throw std::logic_error("diagonal separating pass failed unexpectedly");
    // exhaustive by-index pass below the diagonal hit
    std::int64_t cap = std::min<std::int64_t>(best_index - 1, index_bound);
    for (std::int64_t idx = 1; idx <= cap; ++idx)
      for (auto& h : lattices_of_index(g, idx))
        if (separates(CosetSpace(g, h), n)) return h;
    if (best_index > index_bound && best_index > 1)
      throw std::runtime_error("separating-subgroup search bound exhausted");
    return *best;
  }
  auto subs = finite_subgroups(g);
  std::sort(subs.begin(), subs.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (auto& mem : subs) {
    Subgroup h = Subgroup::finite_subgroup(g, mem);
    if (h.index(g) > index_bound) continue;
    if (separates(CosetSpace(g, h), n)) return h;
  }
  throw std::runtime_error("separating-subgroup search bound exhausted");
}

std::vector<Subgroup> subgroup_schedule(const Group& g, std::int64_t index_bound) {
  std::vector<Subgroup> out;
  if (g.free()) {
    std::set<std::vector<std::vector<Coord>>> seen;
    for (Coord k = 1;; ++k) {
      std::int64_t idx = 1;
      bool fits = true;
      for (std::size_t i = 0; i < g.rank(); ++i) {
        idx *= k;
        if (idx > index_bound) {
          fits = false;
          break;
        }
      }
      if (!fits) break;
      Subgroup h = Subgroup::diagonal_lattice(g, k);
      if (seen.insert(h.hnf()).second) out.push_back(h);
    }
    for (std::int64_t idx = 1; idx <= index_bound; ++idx)
      for (auto& h : lattices_of_index(g, idx))
        if (seen.insert(h.hnf()).second) out.push_back(h);
  } else {
    auto subs = finite_subgroups(g);
    std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    for (auto& mem : subs) {
      Subgroup h = Subgroup::finite_subgroup(g, mem);
      if (h.index(g) <= index_bound) out.push_back(h);
    }
  }
  return out;
}

}  // namespace aca
