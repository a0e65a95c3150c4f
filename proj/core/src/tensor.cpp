//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/tensor.hpp"

#include <cmath>

#include "igt/error.hpp"

namespace igt::ad {

Tensor Tensor::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  Tensor t;
  t.rows_ = rows.size();
  t.cols_ = rows.size() ? rows.begin()->size() : 0;
  t.data_.reserve(t.rows_ * t.cols_);
  for (const auto &row : rows) {
    if (row.size() != t.cols_)
      throw ShapeError("from_rows: ragged initializer");
    t.data_.insert(t.data_.end(), row.begin(), row.end());
  }
  return t;
}

double Tensor::scalar_value() const {
  if (rows_ != 1 || cols_ != 1)
    throw ShapeError("expected scalar [1x1], got " + shape_str());
  return data_[0];
}

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v))
      return false;
  return true;
}

} // namespace igt::ad
