//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_METRICS_HPP_
#define IGT_METRICS_HPP_

#include <cstddef>
#include <vector>

#include "igt/molecule.hpp"
#include "igt/tensor.hpp"

namespace igt {

/// Scores and binary labels aligned by index.
struct ScoredSet {
  std::vector<double> scores;
  std::vector<int> labels;

  std::size_t size() const { return scores.size(); }
  /// Throws ShapeError on length mismatch, Error on labels outside {0,1},
  /// UndefinedMetricError unless both classes are present.
  void validate() const;
};

/// Probability that a random positive outranks a random negative, ties
/// counting one half (Mann-Whitney form).
double auroc(const ScoredSet &s);

/// Step-wise average precision; descending score order with stable ties.
double auprc(const ScoredSet &s);

/// Area under TPR vs log10(FPR) on [lambda, 1], normalized by
/// log10(1/lambda), minus the chance-diagonal value. TPR is linearly
/// interpolated between achieved FPR points.
double adjusted_logauc(const ScoredSet &s, double lambda = 0.001);

/// TPR at the given FPR (linear interpolation; at an exactly achieved FPR,
/// the highest TPR there), divided by that FPR.
double roc_enrichment(const ScoredSet &s, double fpr = 0.01);

/// Active fraction in the top ceil(fraction * N) by score over the active
/// fraction overall; stable index order breaks ties.
double enrichment_factor(const ScoredSet &s, double fraction = 0.01);

/// (TPR + TNR) / 2 with scores >= threshold predicted positive.
double balanced_accuracy(const ScoredSet &s, double threshold = 0.5);

/// Root-mean-square deviation between fixed-order conformations [n x 3];
/// no alignment or symmetry correction.
double rmsd(const ad::Tensor &pose_a, const ad::Tensor &pose_b);
double rmsd(const Molecule &a, const Molecule &b);

enum class PoseLabel { kPositive, kNegative, kDiscard };

/// < 2 A positive, > 4 A negative, [2, 4] A discard.
PoseLabel pose_label(double rmsd_value);

} // namespace igt

#endif // IGT_METRICS_HPP_
