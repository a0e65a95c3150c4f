//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/gradcheck.hpp"

#include <cmath>

#include "igt/fixtures.hpp"
#include "igt/tape.hpp"

namespace igt {

namespace {

double loss_at(const GraphSet &graphs, const IgtParams &params,
               double label) {
  ad::Tape tape;
  BoundParams bp(tape, params, /*requires_grad=*/false);
  ForwardResult fr = model_forward(bp, graphs, /*training=*/false, nullptr);
  ad::Var loss = ad::bce_with_logits(fr.logit, ad::Tensor::scalar(label));
  return loss.value().at(0, 0);
}

} // namespace

GradCheckReport gradient_check(const GraphSet &graphs, IgtParams &params,
                               const GradCheckConfig &cfg) {
  NamedTensors analytic;
  {
    ad::Tape tape;
    BoundParams bp(tape, params, /*requires_grad=*/true);
    ForwardResult fr = model_forward(bp, graphs, /*training=*/false, nullptr);
    ad::Var loss = ad::bce_with_logits(fr.logit, ad::Tensor::scalar(cfg.label));
    tape.backward(loss);
    analytic = bp.collect_grads();
  }

  GradCheckReport report;
  for (std::size_t t = 0; t < params.tensors().size(); ++t) {
    auto &[name, tensor] = params.tensors()[t];
    const ad::Tensor &grad = analytic[t].second;
    for (std::size_t k = 0; k < tensor.size(); ++k) {
      const double saved = tensor.data()[k];
      tensor.data()[k] = saved + cfg.fd_step;
      const double up = loss_at(graphs, params, cfg.label);
      tensor.data()[k] = saved - cfg.fd_step;
      const double down = loss_at(graphs, params, cfg.label);
      tensor.data()[k] = saved;

      const double numeric = (up - down) / (2.0 * cfg.fd_step);
      const double a = grad.data()[k];
      const double denom =
          std::max({std::fabs(a), std::fabs(numeric), cfg.rel_floor});
      const double rel = std::fabs(a - numeric) / denom;
      ++report.n_params;
      if (rel > report.max_rel_err) {
        report.max_rel_err = rel;
        report.worst = {name, k, a, numeric, rel};
      }
    }
  }
  return report;
}

ModelConfig gradcheck_model_config() {
  ModelConfig m;
  m.d_model = 16;
  m.n_heads = 2;
  m.n_blocks = 2;
  m.d_ffn = 24;
  m.dropout = 0.0;
  m.k_pe = 4;
  return m;
}

GradCheckReport fixture_gradient_check(std::uint64_t seed,
                                       const GradCheckConfig &cfg) {
  ModelConfig model_cfg = gradcheck_model_config();
  FeatureConfig feature_cfg;
  feature_cfg.k_pe = model_cfg.k_pe;
  GraphSet graphs = fixture_graphs(feature_cfg);
  IgtParams params = IgtParams::init(model_cfg, feature_cfg, seed);
  return gradient_check(graphs, params, cfg);
}

} // namespace igt
