//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_ATTENTION_HPP_
#define IGT_ATTENTION_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "igt/dataset.hpp"
#include "igt/model.hpp"

namespace igt {

/// Dense row-softmax of H*H^T over all node pairs, then the mean of the
/// entries whose endpoints carry different molecule tags (both directions).
/// Throws UndefinedMetricError when only one molecule is present.
double mean_inter_attention(const ad::Tensor &h,
                            const std::vector<MoleculeTag> &tags);

struct AttentionOptions {
  int bins = 50;
  /// Histogram per-example scores instead of per-target means.
  bool per_example = false;

  void validate() const;
};

struct AttentionScore {
  std::string id;
  std::string target_id;
  double score = 0;
};

struct TargetAttention {
  std::string target_id;
  std::size_t n_examples = 0;
  double mean_score = 0;
};

struct AttentionReport {
  std::vector<AttentionScore> per_example;
  std::vector<TargetAttention> per_target; // first-appearance order
  std::vector<std::size_t> histogram;      // equal-width bins on [0, 1]
  AttentionOptions options;
};

/// Scores every example on the final-block complex embeddings and bins the
/// per-target means (or per-example scores) into the histogram.
AttentionReport attention_analysis(const std::vector<PreparedExample> &examples,
                                   const IgtParams &params,
                                   const AttentionOptions &options,
                                   int workers = 1);

std::vector<std::string> attention_lines(const AttentionReport &report);

/// CSV rows "bin_lo,bin_hi,count" with a header line.
std::vector<std::string> attention_histogram_csv(const AttentionReport &report);

} // namespace igt

#endif // IGT_ATTENTION_HPP_
