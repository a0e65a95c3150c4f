//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_RUN_CONFIG_HPP_
#define IGT_RUN_CONFIG_HPP_

#include <string>
#include <vector>

#include "igt/attention.hpp"
#include "igt/evaluate.hpp"
#include "igt/featurize.hpp"
#include "igt/model.hpp"
#include "igt/split.hpp"
#include "igt/train.hpp"

namespace igt {

struct IoConfig {
  std::string manifest;
  std::string out;
  std::string checkpoint;
  std::string receptor;
  std::string ligand;
  std::string reference;
  std::string baseline_checkpoint;
  std::size_t top_k = 0; // 0 keeps everything
};

/// Full run configuration. Sections mirror the module configs; every leaf is
/// addressable by its dotted name ("model.d_model") from the command line
/// and by the same nesting in a JSON config file. Unknown keys are rejected.
struct RunConfig {
  FeatureConfig feature;
  ModelConfig model;
  TrainConfig train;
  SplitSpec split;
  MetricOptions metrics;
  AttentionOptions attention;
  IoConfig io;
  int workers = 1;

  // Explicit-assignment trackers: the env-seed fallback and the
  // model.k_pe / feature.k_pe sync only touch keys never set explicitly.
  bool model_k_pe_set = false;
  bool train_seed_set = false;
  bool split_seed_set = false;
};

RunConfig run_config_from_json_text(const std::string &text);
RunConfig run_config_from_file(const std::string &path);

/// Assigns one dotted key from its textual value ("model.dropout", "0.2").
/// Throws ConfigError on unknown keys or unparsable values.
void set_config_key(RunConfig &cfg, const std::string &key,
                    const std::string &value);

/// IGT_SEED fills train.seed and split.seed when neither the file nor a
/// flag set them. Throws ConfigError on an unparsable value.
void apply_env_seed(RunConfig &cfg);

/// Syncs model.k_pe from feature.k_pe (unless set explicitly, which must
/// then match) and validates every section.
void finalize_run_config(RunConfig &cfg);

/// Fully resolved config as indented JSON, stable key order.
std::string run_config_json(const RunConfig &cfg);

struct ConfigKeyInfo {
  std::string key;
  std::string description;
  std::string default_value;
};

/// Every dotted key with its description and default, in echo order.
std::vector<ConfigKeyInfo> config_key_table();

} // namespace igt

#endif // IGT_RUN_CONFIG_HPP_
