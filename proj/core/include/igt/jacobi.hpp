//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_JACOBI_HPP_
#define IGT_JACOBI_HPP_

#include <cstddef>
#include <vector>

namespace igt {

/// Eigen-decomposition of a dense symmetric matrix.
struct SymmetricEigen {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major n x n, column k pairs values[k]
  std::size_t n = 0;

  double vector_at(std::size_t row, std::size_t col) const {
    return vectors[row * n + col];
  }
};

/// Cyclic Jacobi rotations. `matrix` is row-major n x n and must be
/// symmetric. Converged when the off-diagonal Frobenius norm drops below
/// 1e-10, capped at 100 sweeps. Eigenvectors come back orthonormal, sorted
/// by ascending eigenvalue.
SymmetricEigen jacobi_eigen(const std::vector<double> &matrix, std::size_t n);

} // namespace igt

#endif // IGT_JACOBI_HPP_
