//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_ADAM_HPP_
#define IGT_ADAM_HPP_

#include <cstdint>
#include <string>
#include <unordered_map>

#include "igt/checkpoint.hpp"
#include "igt/tensor.hpp"

namespace igt {

struct AdamConfig {
  double lr = 1e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

/// Bias-corrected adaptive-moment optimizer over named parameter tensors.
/// Moment buffers are created on first sight of each parameter name.
class Adam {
public:
  explicit Adam(AdamConfig config = {}) : config_(config) {}

  /// Apply one update. `grads` must carry the same names in the same order
  /// as `params`, with matching shapes.
  void step(NamedTensors &params, const NamedTensors &grads);

  std::uint64_t step_count() const { return step_; }
  const AdamConfig &config() const { return config_; }

  /// Serializable snapshot: "adam.step", "adam.lr", "adam.beta1",
  /// "adam.beta2", "adam.eps" scalars followed by "<name>.m" / "<name>.v"
  /// moment pairs in first-seen parameter order.
  NamedTensors state() const;
  static Adam from_state(const NamedTensors &entries);

private:
  struct Moments {
    ad::Tensor m;
    ad::Tensor v;
  };

  Moments &moments_for(const std::string &name, const ad::Tensor &shape_like);

  AdamConfig config_;
  std::uint64_t step_ = 0;
  std::vector<std::string> order_;
  std::unordered_map<std::string, Moments> moments_;
};

} // namespace igt

#endif // IGT_ADAM_HPP_
