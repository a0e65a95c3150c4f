//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/attention.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

#include <json.hpp>

#include "igt/error.hpp"
#include "parallel_for.hpp"

namespace igt {

double mean_inter_attention(const ad::Tensor &h,
                            const std::vector<MoleculeTag> &tags) {
  const std::size_t n = h.rows();
  if (n == 0)
    throw EmptyGraphError("attention analysis on an empty graph");
  if (tags.size() != n)
    throw ShapeError("molecule tags do not match the embedding rows");
  bool has_ligand = false, has_receptor = false;
  for (MoleculeTag t : tags)
    (t == MoleculeTag::kLigand ? has_ligand : has_receptor) = true;
  if (!has_ligand || !has_receptor)
    throw UndefinedMetricError(
        "mean intermolecular attention needs nodes from both molecules");

  const std::size_t d = h.cols();
  double total = 0;
  std::size_t pairs = 0;
  std::vector<double> logits(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double *hi = h.data().data() + i * d;
    double max_logit = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double *hj = h.data().data() + j * d;
      double dot = 0;
      for (std::size_t k = 0; k < d; ++k)
        dot += hi[k] * hj[k];
      logits[j] = dot;
      max_logit = std::max(max_logit, dot);
    }
    double denom = 0;
    for (std::size_t j = 0; j < n; ++j) {
      logits[j] = std::exp(logits[j] - max_logit);
      denom += logits[j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (tags[i] != tags[j]) {
        total += logits[j] / denom;
        ++pairs;
      }
    }
  }
  return total / static_cast<double>(pairs);
}

void AttentionOptions::validate() const {
  if (bins < 1)
    throw ConfigError("attention.bins must be at least 1");
}

AttentionReport attention_analysis(const std::vector<PreparedExample> &examples,
                                   const IgtParams &params,
                                   const AttentionOptions &options,
                                   int workers) {
  options.validate();
  AttentionReport report;
  report.options = options;
  report.per_example.resize(examples.size());
  detail::parallel_for(examples.size(), workers, [&](std::size_t i) {
    const PreparedExample &e = examples[i];
    ad::Tensor complex_h;
    predict_probability(e.graphs, params, nullptr, &complex_h);
    report.per_example[i] = {
        e.record.id, e.record.target_id,
        mean_inter_attention(complex_h, e.graphs.complex.molecule_of)};
  });

  std::vector<std::string> order;
  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (const AttentionScore &s : report.per_example) {
    if (sums.find(s.target_id) == sums.end())
      order.push_back(s.target_id);
    auto &acc = sums[s.target_id];
    acc.first += s.score;
    acc.second += 1;
  }
  for (const std::string &target : order) {
    const auto &acc = sums[target];
    report.per_target.push_back(
        {target, acc.second, acc.first / static_cast<double>(acc.second)});
  }

  report.histogram.assign(static_cast<std::size_t>(options.bins), 0);
  auto bin_of = [&](double v) {
    double scaled = v * options.bins;
    auto idx = static_cast<long>(std::floor(scaled));
    idx = std::clamp(idx, 0L, static_cast<long>(options.bins) - 1);
    return static_cast<std::size_t>(idx);
  };
  if (options.per_example) {
    for (const AttentionScore &s : report.per_example)
      ++report.histogram[bin_of(s.score)];
  } else {
    for (const TargetAttention &t : report.per_target)
      ++report.histogram[bin_of(t.mean_score)];
  }
  return report;
}

std::vector<std::string> attention_lines(const AttentionReport &report) {
  std::vector<std::string> lines;
  lines.reserve(report.per_example.size() + report.per_target.size());
  for (const AttentionScore &s : report.per_example) {
    nlohmann::ordered_json j;
    j["row"] = "example";
    j["id"] = s.id;
    j["target_id"] = s.target_id;
    j["score"] = s.score;
    lines.push_back(j.dump());
  }
  for (const TargetAttention &t : report.per_target) {
    nlohmann::ordered_json j;
    j["row"] = "target";
    j["target_id"] = t.target_id;
    j["n"] = t.n_examples;
    j["mean_score"] = t.mean_score;
    lines.push_back(j.dump());
  }
  return lines;
}

std::vector<std::string>
attention_histogram_csv(const AttentionReport &report) {
  std::vector<std::string> lines;
  lines.push_back("bin_lo,bin_hi,count");
  const double width = 1.0 / report.options.bins;
  for (std::size_t k = 0; k < report.histogram.size(); ++k) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%zu",
                  static_cast<double>(k) * width,
                  static_cast<double>(k + 1) * width, report.histogram[k]);
    lines.push_back(buf);
  }
  return lines;
}

} // namespace igt
