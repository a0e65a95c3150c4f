//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_TENSOR_HPP_
#define IGT_TENSOR_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace igt::ad {

/// Dense row-major matrix of 64-bit floats. Row vectors are [1 x n], scalars
/// are [1 x 1].
class Tensor {
public:
  Tensor() = default;
  Tensor(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Tensor scalar(double v) {
    Tensor t(1, 1);
    t.data_[0] = v;
    return t;
  }

  static Tensor row(std::vector<double> values) {
    Tensor t;
    t.rows_ = 1;
    t.cols_ = values.size();
    t.data_ = std::move(values);
    return t;
  }

  static Tensor from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<double> &data() { return data_; }
  const std::vector<double> &data() const { return data_; }

  bool same_shape(const Tensor &o) const {
    return rows_ == o.rows_ && cols_ == o.cols_;
  }

  std::string shape_str() const {
    return "[" + std::to_string(rows_) + "x" + std::to_string(cols_) + "]";
  }

  /// Value of a [1 x 1] tensor; throws ShapeError otherwise.
  double scalar_value() const;

  bool all_finite() const;

  bool operator==(const Tensor &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

} // namespace igt::ad

#endif // IGT_TENSOR_HPP_
