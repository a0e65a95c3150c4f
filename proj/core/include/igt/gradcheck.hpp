//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_GRADCHECK_HPP_
#define IGT_GRADCHECK_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "igt/featurize.hpp"
#include "igt/model.hpp"

namespace igt {

struct GradCheckConfig {
  double fd_step = 1e-5;
  /// Relative error uses max(|analytic|, |numeric|, rel_floor) as the
  /// denominator so near-zero gradients compare on an absolute scale.
  double rel_floor = 1e-4;
  double label = 1.0;
};

struct GradCheckWorst {
  std::string name;
  std::size_t index = 0;
  double analytic = 0.0;
  double numeric = 0.0;
  double rel_err = 0.0;
};

struct GradCheckReport {
  std::size_t n_params = 0;
  double max_rel_err = 0.0;
  GradCheckWorst worst;

  bool pass(double tol = 1e-6) const { return max_rel_err < tol; }
};

/// Compare reverse-mode gradients of the scalar training loss against
/// central finite differences, element by element over every parameter.
/// `params` is restored to its original values before returning.
GradCheckReport gradient_check(const GraphSet &graphs, IgtParams &params,
                               const GradCheckConfig &cfg = {});

/// Model configuration small enough to finite-difference every parameter in
/// seconds while exercising all layer kinds.
ModelConfig gradcheck_model_config();

/// gradient_check on the bundled fixture complex with the compact model.
GradCheckReport fixture_gradient_check(std::uint64_t seed = 91,
                                       const GradCheckConfig &cfg = {});

} // namespace igt

#endif // IGT_GRADCHECK_HPP_
