#include "aca/linalg.hpp"

#include <stdexcept>

namespace aca {

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Scalar> y(rows_, Scalar::zero(field_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero()) y[r] = y[r] + at(r, c) * x[c];
  return y;
}

LinearSolveResult solve_linear(const Matrix& m, const std::vector<Scalar>& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("rhs length mismatch");
  const Field f = m.field();
  const std::size_t nr = m.rows(), nc = m.cols();

  // augmented working copy
  Matrix w = m;
  std::vector<Scalar> b = rhs;

  std::vector<std::size_t> pivot_col;  // per pivot row
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t sel = row;
    while (sel < nr && w.at(sel, col).is_zero()) ++sel;
    if (sel == nr) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < nc; ++c) std::swap(w.at(sel, c), w.at(row, c));
      std::swap(b[sel], b[row]);
    }
    Scalar inv = w.at(row, col).inverse();
    for (std::size_t c = col; c < nc; ++c) w.at(row, c) = w.at(row, c) * inv;
    b[row] = b[row] * inv;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == row || w.at(r, col).is_zero()) continue;
      Scalar factor = w.at(r, col);
      for (std::size_t c = col; c < nc; ++c) w.at(r, c) = w.at(r, c) - factor * w.at(row, c);
      b[r] = b[r] - factor * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolveResult res;
  for (std::size_t r = row; r < nr; ++r)
    if (!b[r].is_zero()) {
      res.consistent = false;
      return res;
    }
  res.consistent = true;

  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  res.particular.assign(nc, Scalar::zero(f));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) res.particular[pivot_col[r]] = b[r];

  for (std::size_t free_c = 0; free_c < nc; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Scalar> k(nc, Scalar::zero(f));
    k[free_c] = Scalar::one(f);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      k[pivot_col[r]] = -w.at(r, free_c);
    res.kernel.push_back(std::move(k));
  }

  // exact recheck
  auto resid = m.apply(res.particular);
  for (std::size_t r = 0; r < nr; ++r)
    if (!(resid[r] == rhs[r])) throw std::logic_error("elimination produced an inexact solution");
  for (auto& k : res.kernel) {
    auto z = m.apply(k);
    for (auto& zi : z)
      if (!zi.is_zero()) throw std::logic_error("kernel vector does not map to zero");
  }
  return res;
}

}  // namespace aca
