//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_SCREEN_HPP_
#define IGT_SCREEN_HPP_

#include <optional>
#include <string>
#include <vector>

#include "igt/dataset.hpp"
#include "igt/model.hpp"

namespace igt {

struct ScreenResult {
  std::string id;
  std::string target_id;
  double probability = 0;
  std::size_t rank = 0; // 1-based after sorting
};

/// Scores every example and ranks by descending probability, ties broken by
/// ascending id.
std::vector<ScreenResult> screen(const std::vector<PreparedExample> &examples,
                                 const IgtParams &params, int workers = 1);

std::vector<std::string> screen_lines(const std::vector<ScreenResult> &results,
                                      std::size_t top_k = 0);

struct PoseScore {
  int pose_index = 0; // position in the input pose list
  double probability = 0;
  std::size_t rank = 0;
  std::optional<double> rmsd_to_reference;
};

struct PoseRanking {
  std::vector<PoseScore> ranked;
  /// hit_rate[k-1]: fraction of the top k poses within 2 A of the
  /// reference. Empty when no reference was given.
  std::vector<double> hit_rate;
};

/// Scores each pose of one ligand against the receptor and ranks by
/// descending probability, ties broken by ascending pose index.
PoseRanking rank_poses(const Molecule &receptor,
                       const std::vector<Molecule> &poses,
                       const IgtParams &params,
                       const Molecule *reference = nullptr, int workers = 1);

std::vector<std::string> pose_lines(const PoseRanking &ranking);
std::vector<std::string> hit_rate_csv_lines(const PoseRanking &ranking);

} // namespace igt

#endif // IGT_SCREEN_HPP_
