//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/screen.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "igt/metrics.hpp"
#include "parallel_for.hpp"

namespace igt {

std::vector<ScreenResult> screen(const std::vector<PreparedExample> &examples,
                                 const IgtParams &params, int workers) {
  std::vector<ScreenResult> results(examples.size());
  detail::parallel_for(examples.size(), workers, [&](std::size_t i) {
    const PreparedExample &e = examples[i];
    results[i] = {e.record.id, e.record.target_id,
                  predict_probability(e.graphs, params), 0};
  });
  std::sort(results.begin(), results.end(),
            [](const ScreenResult &a, const ScreenResult &b) {
              if (a.probability != b.probability)
                return a.probability > b.probability;
              return a.id < b.id;
            });
  for (std::size_t i = 0; i < results.size(); ++i)
    results[i].rank = i + 1;
  return results;
}

std::vector<std::string> screen_lines(const std::vector<ScreenResult> &results,
                                      std::size_t top_k) {
  std::size_t n = results.size();
  if (top_k > 0)
    n = std::min(n, top_k);
  std::vector<std::string> lines;
  lines.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ScreenResult &r = results[i];
    nlohmann::ordered_json j;
    j["rank"] = r.rank;
    j["id"] = r.id;
    j["target_id"] = r.target_id;
    j["probability"] = r.probability;
    lines.push_back(j.dump());
  }
  return lines;
}

PoseRanking rank_poses(const Molecule &receptor,
                       const std::vector<Molecule> &poses,
                       const IgtParams &params, const Molecule *reference,
                       int workers) {
  PoseRanking out;
  out.ranked.resize(poses.size());
  std::vector<Molecule> heavy(poses.size());
  for (std::size_t i = 0; i < poses.size(); ++i)
    heavy[i] = strip_hydrogens(poses[i]);
  Molecule heavy_ref;
  if (reference != nullptr)
    heavy_ref = strip_hydrogens(*reference);
  detail::parallel_for(poses.size(), workers, [&](std::size_t i) {
    PoseScore &p = out.ranked[i];
    p.pose_index = static_cast<int>(i);
    GraphSet graphs =
        featurize_complex(receptor, heavy[i], params.feature_config());
    p.probability = predict_probability(graphs, params);
    if (reference != nullptr)
      p.rmsd_to_reference = rmsd(heavy[i], heavy_ref);
  });
  std::sort(out.ranked.begin(), out.ranked.end(),
            [](const PoseScore &a, const PoseScore &b) {
              if (a.probability != b.probability)
                return a.probability > b.probability;
              return a.pose_index < b.pose_index;
            });
  for (std::size_t i = 0; i < out.ranked.size(); ++i)
    out.ranked[i].rank = i + 1;

  if (reference != nullptr && !out.ranked.empty()) {
    out.hit_rate.resize(out.ranked.size());
    std::size_t hits = 0;
    for (std::size_t k = 0; k < out.ranked.size(); ++k) {
      if (*out.ranked[k].rmsd_to_reference < 2.0)
        ++hits;
      out.hit_rate[k] = static_cast<double>(hits) / static_cast<double>(k + 1);
    }
  }
  return out;
}

std::vector<std::string> pose_lines(const PoseRanking &ranking) {
  std::vector<std::string> lines;
  lines.reserve(ranking.ranked.size());
  for (const PoseScore &p : ranking.ranked) {
    nlohmann::ordered_json j;
    j["rank"] = p.rank;
    j["pose_index"] = p.pose_index;
    j["probability"] = p.probability;
    if (p.rmsd_to_reference.has_value())
      j["rmsd"] = *p.rmsd_to_reference;
    else
      j["rmsd"] = nullptr;
    lines.push_back(j.dump());
  }
  return lines;
}

std::vector<std::string> hit_rate_csv_lines(const PoseRanking &ranking) {
  std::vector<std::string> lines;
  lines.push_back("k,hit_rate");
  for (std::size_t k = 0; k < ranking.hit_rate.size(); ++k) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu,%.6f", k + 1, ranking.hit_rate[k]);
    lines.push_back(buf);
  }
  return lines;
}

} // namespace igt
