//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_TRAIN_HPP_
#define IGT_TRAIN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "igt/adam.hpp"
#include "igt/dataset.hpp"
#include "igt/model.hpp"

namespace igt {

struct TrainConfig {
  double lr = 1e-5;
  int batch = 32; // gradient-accumulation count per optimizer step
  int max_epochs = 100;
  int patience = 10; // epochs without val AUROC improvement before stopping
  std::uint64_t seed = 0;
  bool pos_weight_auto = false; // inverse-frequency positive class weight

  void validate() const;
};

/// One labeled, featurized training example.
struct TrainExample {
  std::string id;
  std::string target_id;
  GraphSet graphs;
  int label = 0;
};

struct EpochStats {
  int epoch = 0;
  double mean_loss = 0;
  std::optional<double> val_auroc; // absent when the val set defines none
  double wall_seconds = 0;
};

/// Epoch-stepped training: shuffled pass with gradient accumulation over
/// `batch` examples per optimizer step, BCE-with-logits loss, dropout and
/// random PE signs re-drawn per presentation from the seeded stream.
class Trainer {
public:
  Trainer(IgtParams params, TrainConfig cfg);

  /// One full pass; returns the mean per-example loss.
  double train_epoch(const std::vector<TrainExample> &examples);

  /// Macro-averaged AUROC over targets with both classes; absent if none.
  std::optional<double> validation_auroc(
      const std::vector<TrainExample> &examples) const;

  std::size_t steps_taken() const { return optimizer_.step_count(); }
  IgtParams &params() { return params_; }
  const IgtParams &params() const { return params_; }
  Adam &optimizer() { return optimizer_; }
  const TrainConfig &config() const { return cfg_; }
  double pos_weight() const { return pos_weight_; }

private:
  IgtParams params_;
  TrainConfig cfg_;
  Adam optimizer_;
  std::mt19937_64 shuffle_rng_;
  std::mt19937_64 dropout_rng_;
  std::mt19937_64 sign_rng_;
  double pos_weight_ = 1.0;
  bool pos_weight_ready_ = false;
};

struct TrainOutcome {
  IgtParams best_params;
  NamedTensors best_opt_state;
  std::vector<EpochStats> log;
  int best_epoch = -1;
};

/// Full loop with early stopping on validation AUROC. The all-one-class
/// check throws UndefinedMetricError before any step.
TrainOutcome run_training(IgtParams params,
                          const std::vector<TrainExample> &train_set,
                          const std::vector<TrainExample> &val_set,
                          const TrainConfig &cfg);

} // namespace igt

#endif // IGT_TRAIN_HPP_
