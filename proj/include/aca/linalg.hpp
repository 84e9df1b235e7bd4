#pragma once

#include <cstddef>
#include <vector>

#include "aca/scalar.hpp"

namespace aca {

// Dense exact matrix over one field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

struct LinearSolveResult {
  bool consistent = false;
  std::vector<Scalar> particular;            // one solution, when consistent
  std::vector<std::vector<Scalar>> kernel;   // basis of the homogeneous solutions
};

// Exact Gauss-Jordan elimination; the returned solution and kernel vectors
// satisfy the system exactly (rechecked before returning).
LinearSolveResult solve_linear(const Matrix& m, const std::vector<Scalar>& rhs);

}  // namespace aca
