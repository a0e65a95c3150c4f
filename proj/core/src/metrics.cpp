//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "igt/error.hpp"

namespace igt {

namespace {

std::size_t count_positives(const ScoredSet &s) {
  return static_cast<std::size_t>(
      std::count(s.labels.begin(), s.labels.end(), 1));
}

/// Indices sorted by descending score; equal scores keep input order.
std::vector<std::size_t> descending_order(const ScoredSet &s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return s.scores[a] > s.scores[b];
                   });
  return order;
}

/// ROC vertices from (0,0) to (1,1); tied scores advance in one step.
std::vector<std::pair<double, double>> roc_points(const ScoredSet &s) {
  const std::vector<std::size_t> order = descending_order(s);
  const double n_pos = static_cast<double>(count_positives(s));
  const double n_neg = static_cast<double>(s.size()) - n_pos;
  std::vector<std::pair<double, double>> pts;
  pts.emplace_back(0.0, 0.0);
  std::size_t tp = 0, fp = 0, k = 0;
  while (k < order.size()) {
    const double score = s.scores[order[k]];
    while (k < order.size() && s.scores[order[k]] == score) {
      if (s.labels[order[k]] == 1)
        ++tp;
      else
        ++fp;
      ++k;
    }
    pts.emplace_back(static_cast<double>(fp) / n_neg,
                     static_cast<double>(tp) / n_pos);
  }
  return pts;
}

/// TPR at the exact FPR value f, linearly interpolated; at an achieved FPR
/// vertex, the highest TPR reached there.
double tpr_at(const std::vector<std::pair<double, double>> &pts, double f) {
  double exact = -1.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].first == f)
      exact = pts[k].second;
    else if (pts[k].first > f) {
      if (exact >= 0.0)
        return exact;
      const auto &[f0, t0] = pts[k - 1];
      const auto &[f1, t1] = pts[k];
      return t0 + (t1 - t0) * (f - f0) / (f1 - f0);
    }
  }
  return exact >= 0.0 ? exact : 1.0;
}

} // namespace

void ScoredSet::validate() const {
  if (scores.size() != labels.size())
    throw ShapeError("scored set: " + std::to_string(scores.size()) +
                     " scores vs " + std::to_string(labels.size()) +
                     " labels");
  for (int l : labels)
    if (l != 0 && l != 1)
      throw Error("scored set: labels must be 0 or 1");
  const std::size_t pos = static_cast<std::size_t>(
      std::count(labels.begin(), labels.end(), 1));
  if (pos == 0 || pos == labels.size())
    throw UndefinedMetricError(
        "metric needs at least one positive and one negative; got " +
        std::to_string(pos) + " positives of " + std::to_string(labels.size()));
}

double auroc(const ScoredSet &s) {
  s.validate();
  // Average ranks over tied scores, then the Mann-Whitney U statistic.
  const std::size_t n = s.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return s.scores[a] < s.scores[b];
                   });
  std::vector<double> rank(n);
  std::size_t k = 0;
  while (k < n) {
    std::size_t e = k;
    while (e < n && s.scores[order[e]] == s.scores[order[k]])
      ++e;
    const double avg = 0.5 * (static_cast<double>(k + 1) +
                              static_cast<double>(e));
    for (std::size_t i = k; i < e; ++i)
      rank[order[i]] = avg;
    k = e;
  }
  const double n_pos = static_cast<double>(count_positives(s));
  const double n_neg = static_cast<double>(n) - n_pos;
  double rank_sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (s.labels[i] == 1)
      rank_sum += rank[i];
  const double u = rank_sum - n_pos * (n_pos + 1.0) / 2.0;
  return u / (n_pos * n_neg);
}

double auprc(const ScoredSet &s) {
  s.validate();
  const std::vector<std::size_t> order = descending_order(s);
  double sum = 0;
  std::size_t tp = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (s.labels[order[k]] == 1) {
      ++tp;
      sum += static_cast<double>(tp) / static_cast<double>(k + 1);
    }
  }
  return sum / static_cast<double>(count_positives(s));
}

double adjusted_logauc(const ScoredSet &s, double lambda) {
  if (lambda <= 0.0 || lambda >= 1.0)
    throw DegenerateRangeError("logauc lambda must lie in (0, 1), got " +
                               std::to_string(lambda));
  s.validate();
  const std::vector<std::pair<double, double>> pts = roc_points(s);
  // On [f0, f1] the curve is t = a + b f; its log10-integral is
  // (a ln(f1/f0) + b (f1 - f0)) / ln 10.
  double area = 0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    double f0 = pts[k - 1].first, t0 = pts[k - 1].second;
    double f1 = pts[k].first, t1 = pts[k].second;
    if (f1 <= lambda || f0 == f1)
      continue;
    const double b = (t1 - t0) / (f1 - f0);
    const double a = t0 - b * f0;
    if (f0 < lambda)
      f0 = lambda;
    area += a * std::log(f1 / f0) + b * (f1 - f0);
  }
  area /= std::log(10.0);
  const double chance = (1.0 - lambda) / std::log(10.0);
  const double norm = std::log10(1.0 / lambda);
  return (area - chance) / norm;
}

double roc_enrichment(const ScoredSet &s, double fpr) {
  if (fpr <= 0.0 || fpr > 1.0)
    throw DegenerateRangeError("roc enrichment fpr must lie in (0, 1], got " +
                               std::to_string(fpr));
  s.validate();
  return tpr_at(roc_points(s), fpr) / fpr;
}

double enrichment_factor(const ScoredSet &s, double fraction) {
  if (fraction <= 0.0 || fraction > 1.0)
    throw DegenerateRangeError(
        "enrichment fraction must lie in (0, 1], got " +
        std::to_string(fraction));
  s.validate();
  const std::size_t n = s.size();
  const std::size_t top = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(n)));
  const std::vector<std::size_t> order = descending_order(s);
  std::size_t hits = 0;
  for (std::size_t k = 0; k < top; ++k)
    hits += static_cast<std::size_t>(s.labels[order[k]] == 1);
  const double n_pos = static_cast<double>(count_positives(s));
  return (static_cast<double>(hits) / static_cast<double>(top)) /
         (n_pos / static_cast<double>(n));
}

double balanced_accuracy(const ScoredSet &s, double threshold) {
  s.validate();
  std::size_t tp = 0, tn = 0, pos = 0, neg = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool predicted = s.scores[i] >= threshold;
    if (s.labels[i] == 1) {
      ++pos;
      tp += static_cast<std::size_t>(predicted);
    } else {
      ++neg;
      tn += static_cast<std::size_t>(!predicted);
    }
  }
  return 0.5 * (static_cast<double>(tp) / static_cast<double>(pos) +
                static_cast<double>(tn) / static_cast<double>(neg));
}

double rmsd(const ad::Tensor &pose_a, const ad::Tensor &pose_b) {
  if (!pose_a.same_shape(pose_b) || pose_a.cols() != 3 || pose_a.rows() == 0)
    throw ShapeError("rmsd: " + pose_a.shape_str() + " vs " +
                     pose_b.shape_str());
  double sum = 0;
  for (std::size_t i = 0; i < pose_a.rows(); ++i)
    for (std::size_t c = 0; c < 3; ++c) {
      const double d = pose_a.at(i, c) - pose_b.at(i, c);
      sum += d * d;
    }
  return std::sqrt(sum / static_cast<double>(pose_a.rows()));
}

double rmsd(const Molecule &a, const Molecule &b) {
  if (a.size() != b.size() || a.size() == 0)
    throw ShapeError("rmsd: " + std::to_string(a.size()) + " atoms vs " +
                     std::to_string(b.size()));
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t c = 0; c < 3; ++c) {
      const double d = a.atoms[i].position[c] - b.atoms[i].position[c];
      sum += d * d;
    }
  return std::sqrt(sum / static_cast<double>(a.size()));
}

PoseLabel pose_label(double rmsd_value) {
  if (rmsd_value < 2.0)
    return PoseLabel::kPositive;
  if (rmsd_value > 4.0)
    return PoseLabel::kNegative;
  return PoseLabel::kDiscard;
}

} // namespace igt
