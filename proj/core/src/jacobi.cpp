//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "igt/error.hpp"

namespace igt {

namespace {

constexpr double kOffDiagTol = 1e-10;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double> &a, std::size_t n) {
  double s = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q)
      s += 2.0 * a[p * n + q] * a[p * n + q];
  return std::sqrt(s);
}

} // namespace

SymmetricEigen jacobi_eigen(const std::vector<double> &matrix, std::size_t n) {
  if (matrix.size() != n * n)
    throw ShapeError("jacobi_eigen: buffer size " +
                     std::to_string(matrix.size()) + " does not match n=" +
                     std::to_string(n));
  std::vector<double> a = matrix;
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    v[i * n + i] = 1.0;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a, n) < kOffDiagTol)
      break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300)
          continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        // Smaller-angle root keeps the rotation stable.
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r != p && r != q) {
            const double arp = a[r * n + p];
            const double arq = a[r * n + q];
            a[r * n + p] = arp - s * (arq + tau * arp);
            a[p * n + r] = a[r * n + p];
            a[r * n + q] = arq + s * (arp - tau * arq);
            a[q * n + r] = a[r * n + q];
          }
          const double vrp = v[r * n + p];
          const double vrq = v[r * n + q];
          v[r * n + p] = vrp - s * (vrq + tau * vrp);
          v[r * n + q] = vrq + s * (vrp - tau * vrq);
        }
      }
    }
  }

  SymmetricEigen out;
  out.n = n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i)
    diag[i] = a[i * n + i];
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] < diag[y]; });

  out.values.resize(n);
  out.vectors.assign(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = diag[order[k]];
    for (std::size_t r = 0; r < n; ++r)
      out.vectors[r * n + k] = v[r * n + order[k]];
  }
  return out;
}

} // namespace igt
