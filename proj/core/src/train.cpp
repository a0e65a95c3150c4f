//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/train.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>

#include "igt/error.hpp"
#include "igt/metrics.hpp"

namespace igt {

void TrainConfig::validate() const {
  if (lr < 0)
    throw ConfigError("learning rate must be non-negative");
  if (batch < 1)
    throw ConfigError("batch must be at least 1");
  if (max_epochs < 1)
    throw ConfigError("max_epochs must be at least 1");
  if (patience < 1)
    throw ConfigError("patience must be at least 1");
}

namespace {

/// Copy of a graph set with every PE column's sign redrawn. Padding columns
/// are all-zero, so their draws are consumed but change nothing.
GraphSet with_random_pe_signs(const GraphSet &graphs, std::mt19937_64 &rng) {
  GraphSet out = graphs;
  auto flip = [&](ad::Tensor &pe) {
    for (std::size_t c = 0; c < pe.cols(); ++c) {
      if ((rng() & 1ull) == 0)
        continue;
      for (std::size_t r = 0; r < pe.rows(); ++r)
        pe.at(r, c) = -pe.at(r, c);
    }
  };
  flip(out.ligand.pos_enc);
  flip(out.receptor.pos_enc);
  flip(out.complex.graph.pos_enc);
  return out;
}

void check_both_classes(const std::vector<TrainExample> &examples) {
  std::size_t pos = 0;
  for (const TrainExample &e : examples)
    pos += static_cast<std::size_t>(e.label == 1);
  if (examples.empty() || pos == 0 || pos == examples.size())
    throw UndefinedMetricError(
        "training set must contain both classes; got " + std::to_string(pos) +
        " positives of " + std::to_string(examples.size()));
}

} // namespace

Trainer::Trainer(IgtParams params, TrainConfig cfg)
    : params_(std::move(params)), cfg_(cfg),
      optimizer_(AdamConfig{cfg.lr, 0.9, 0.999, 1e-8}),
      shuffle_rng_(cfg.seed), dropout_rng_(cfg.seed ^ 0x9e3779b97f4a7c15ull),
      sign_rng_(cfg.seed ^ 0x6a09e667f3bcc908ull) {
  cfg_.validate();
}

double Trainer::train_epoch(const std::vector<TrainExample> &examples) {
  check_both_classes(examples);
  if (!pos_weight_ready_) {
    if (cfg_.pos_weight_auto) {
      double pos = 0;
      for (const TrainExample &e : examples)
        pos += static_cast<double>(e.label == 1);
      pos_weight_ = (static_cast<double>(examples.size()) - pos) / pos;
    }
    pos_weight_ready_ = true;
  }

  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size() - 1; i > 0; --i)
    std::swap(order[i], order[shuffle_rng_() % (i + 1)]);

  NamedTensors accum;
  std::size_t in_batch = 0;
  double loss_sum = 0;

  auto flush = [&]() {
    if (in_batch == 0)
      return;
    for (auto &[name, g] : accum)
      for (double &v : g.data())
        v /= static_cast<double>(in_batch);
    optimizer_.step(params_.tensors(), accum);
    accum.clear();
    in_batch = 0;
  };

  for (std::size_t k = 0; k < order.size(); ++k) {
    const TrainExample &ex = examples[order[k]];
    const GraphSet graphs = with_random_pe_signs(ex.graphs, sign_rng_);

    ad::Tape tape;
    BoundParams bp(tape, params_, /*requires_grad=*/true);
    ForwardResult fwd =
        model_forward(bp, graphs, /*training=*/true, &dropout_rng_);
    ad::Var loss = ad::bce_with_logits(
        fwd.logit, ad::Tensor::scalar(static_cast<double>(ex.label)),
        ex.label == 1 ? pos_weight_ : 1.0);
    loss_sum += loss.value().scalar_value();
    tape.backward(loss);

    NamedTensors grads = bp.collect_grads();
    if (accum.empty()) {
      accum = std::move(grads);
    } else {
      for (std::size_t p = 0; p < accum.size(); ++p)
        for (std::size_t i = 0; i < accum[p].second.size(); ++i)
          accum[p].second.data()[i] += grads[p].second.data()[i];
    }
    if (++in_batch == static_cast<std::size_t>(cfg_.batch))
      flush();
  }
  flush();
  return loss_sum / static_cast<double>(examples.size());
}

std::optional<double> Trainer::validation_auroc(
    const std::vector<TrainExample> &examples) const {
  std::map<std::string, ScoredSet> by_target;
  for (const TrainExample &e : examples) {
    ScoredSet &s = by_target[e.target_id];
    s.scores.push_back(predict_probability(e.graphs, params_));
    s.labels.push_back(e.label);
  }
  double sum = 0;
  std::size_t defined = 0;
  for (const auto &[target, s] : by_target) {
    try {
      sum += auroc(s);
      ++defined;
    } catch (const UndefinedMetricError &) {
    }
  }
  if (defined == 0)
    return std::nullopt;
  return sum / static_cast<double>(defined);
}

TrainOutcome run_training(IgtParams params,
                          const std::vector<TrainExample> &train_set,
                          const std::vector<TrainExample> &val_set,
                          const TrainConfig &cfg) {
  check_both_classes(train_set);
  Trainer trainer(std::move(params), cfg);

  TrainOutcome outcome{trainer.params(), trainer.optimizer().state(), {}, -1};
  double best_auroc = -1.0;
  int since_best = 0;

  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    const auto t0 = std::chrono::steady_clock::now();
    EpochStats stats;
    stats.epoch = epoch;
    stats.mean_loss = trainer.train_epoch(train_set);
    if (!val_set.empty())
      stats.val_auroc = trainer.validation_auroc(val_set);
    stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    outcome.log.push_back(stats);

    if (stats.val_auroc.has_value()) {
      if (*stats.val_auroc > best_auroc) {
        best_auroc = *stats.val_auroc;
        outcome.best_params = trainer.params();
        outcome.best_opt_state = trainer.optimizer().state();
        outcome.best_epoch = epoch;
        since_best = 0;
      } else if (++since_best >= cfg.patience) {
        break;
      }
    } else {
      outcome.best_params = trainer.params();
      outcome.best_opt_state = trainer.optimizer().state();
      outcome.best_epoch = epoch;
    }
  }
  return outcome;
}

} // namespace igt
