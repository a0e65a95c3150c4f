//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_EVALUATE_HPP_
#define IGT_EVALUATE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "igt/dataset.hpp"
#include "igt/model.hpp"

namespace igt {

/// Operating points recorded alongside every evaluation report.
struct MetricOptions {
  double logauc_lambda = 0.001;
  double roc_fpr = 0.01;
  double ef_fraction = 0.01;
  double threshold = 0.5;

  void validate() const;
};

/// One value per metric; absent when undefined for the input (single-class
/// target), with the diagnostic kept in `note`.
struct MetricValues {
  std::optional<double> auroc;
  std::optional<double> auprc;
  std::optional<double> logauc;
  std::optional<double> roc_enrichment;
  std::optional<double> enrichment_factor;
  std::optional<double> balanced_accuracy;
  std::string note;

  bool complete() const;
};

struct TargetReport {
  std::string target_id;
  std::size_t n_examples = 0;
  std::size_t n_positives = 0;
  MetricValues metrics;
};

struct Prediction {
  std::string id;
  std::string target_id;
  double probability = 0;
  int label = 0;
};

struct EvalReport {
  std::vector<Prediction> predictions;
  std::vector<TargetReport> per_target; // first-appearance order
  MetricValues macro;  // per-metric mean over targets defining it
  TargetReport pooled; // all predictions as one set
  MetricOptions options;
};

/// Predict every example (canonical signs, no dropout) and compute the
/// metric table. Records must carry labels. `workers` parallelizes the
/// forward passes only; the report is identical for any worker count.
EvalReport evaluate(const std::vector<PreparedExample> &examples,
                    const IgtParams &params, const MetricOptions &options,
                    int workers = 1);

/// Flat text table: one row per target plus macro and pooled rows.
std::string format_eval_table(const EvalReport &report);

/// Same content in manifest object-notation, one record per line.
std::vector<std::string> eval_report_lines(const EvalReport &report);

std::vector<std::string> prediction_lines(const EvalReport &report);

} // namespace igt

#endif // IGT_EVALUATE_HPP_
