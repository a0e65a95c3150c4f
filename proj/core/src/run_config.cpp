//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "igt/error.hpp"

namespace igt {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad_value(const std::string &key, const char *want) {
  throw ConfigError("config key " + key + " expects " + want);
}

double as_double(const json &v, const std::string &key) {
  if (v.is_number())
    return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    try {
      double d = std::stod(s, &used);
      if (used == s.size())
        return d;
    } catch (const std::exception &) {
    }
  }
  bad_value(key, "a number");
}

int as_int(const json &v, const std::string &key) {
  double d = as_double(v, key);
  int i = static_cast<int>(d);
  if (static_cast<double>(i) != d)
    bad_value(key, "an integer");
  return i;
}

std::uint64_t as_u64(const json &v, const std::string &key) {
  if (v.is_number_unsigned())
    return v.get<std::uint64_t>();
  if (v.is_number_integer()) {
    auto i = v.get<std::int64_t>();
    if (i >= 0)
      return static_cast<std::uint64_t>(i);
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    std::size_t used = 0;
    try {
      std::uint64_t u = std::stoull(s, &used);
      if (used == s.size())
        return u;
    } catch (const std::exception &) {
    }
  }
  bad_value(key, "a non-negative integer");
}

bool as_bool(const json &v, const std::string &key) {
  if (v.is_boolean())
    return v.get<bool>();
  if (v.is_number_integer()) {
    auto i = v.get<std::int64_t>();
    if (i == 0 || i == 1)
      return i == 1;
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "true" || s == "1")
      return true;
    if (s == "false" || s == "0")
      return false;
  }
  bad_value(key, "a boolean");
}

std::string as_string(const json &v, const std::string &key) {
  if (v.is_string())
    return v.get<std::string>();
  bad_value(key, "a string");
}

HeadKind as_head_kind(const json &v, const std::string &key) {
  const std::string s = as_string(v, key);
  if (s == "activity")
    return HeadKind::kActivity;
  if (s == "pose")
    return HeadKind::kPose;
  bad_value(key, "\"activity\" or \"pose\"");
}

Aggregate as_aggregate(const json &v, const std::string &key) {
  const std::string s = as_string(v, key);
  if (s == "mean")
    return Aggregate::kMean;
  if (s == "sum")
    return Aggregate::kSum;
  bad_value(key, "\"mean\" or \"sum\"");
}

const char *head_kind_name(HeadKind k) {
  return k == HeadKind::kActivity ? "activity" : "pose";
}

const char *aggregate_name(Aggregate a) {
  return a == Aggregate::kMean ? "mean" : "sum";
}

void apply_key(RunConfig &c, const std::string &key, const json &v) {
  auto is = [&](const char *k) { return key == k; };
  if (is("feature.pocket_cutoff"))
    c.feature.pocket_cutoff = as_double(v, key);
  else if (is("feature.inter_cutoff"))
    c.feature.inter_cutoff = as_double(v, key);
  else if (is("feature.rbf_centers"))
    c.feature.rbf_centers = as_int(v, key);
  else if (is("feature.rbf_sigma"))
    c.feature.rbf_sigma = as_double(v, key);
  else if (is("feature.k_pe"))
    c.feature.k_pe = as_int(v, key);
  else if (is("feature.atom_symbol_only"))
    c.feature.atom_symbol_only = as_bool(v, key);
  else if (is("feature.drop_inter_distance"))
    c.feature.drop_inter_distance = as_bool(v, key);
  else if (is("feature.inter_distance_only"))
    c.feature.inter_distance_only = as_bool(v, key);
  else if (is("feature.drop_complex_intra_edge_features"))
    c.feature.drop_complex_intra_edge_features = as_bool(v, key);
  else if (is("model.d_model"))
    c.model.d_model = as_int(v, key);
  else if (is("model.n_heads"))
    c.model.n_heads = as_int(v, key);
  else if (is("model.n_blocks"))
    c.model.n_blocks = as_int(v, key);
  else if (is("model.d_ffn"))
    c.model.d_ffn = as_int(v, key);
  else if (is("model.dropout"))
    c.model.dropout = as_double(v, key);
  else if (is("model.k_pe")) {
    c.model.k_pe = as_int(v, key);
    c.model_k_pe_set = true;
  } else if (is("model.one_way"))
    c.model.one_way = as_bool(v, key);
  else if (is("model.head_kind"))
    c.model.head_kind = as_head_kind(v, key);
  else if (is("model.aggregate"))
    c.model.aggregate = as_aggregate(v, key);
  else if (is("train.lr"))
    c.train.lr = as_double(v, key);
  else if (is("train.batch"))
    c.train.batch = as_int(v, key);
  else if (is("train.max_epochs"))
    c.train.max_epochs = as_int(v, key);
  else if (is("train.patience"))
    c.train.patience = as_int(v, key);
  else if (is("train.seed")) {
    c.train.seed = as_u64(v, key);
    c.train_seed_set = true;
  } else if (is("train.pos_weight_auto"))
    c.train.pos_weight_auto = as_bool(v, key);
  else if (is("split.train"))
    c.split.r_train = as_double(v, key);
  else if (is("split.val"))
    c.split.r_val = as_double(v, key);
  else if (is("split.test"))
    c.split.r_test = as_double(v, key);
  else if (is("split.seed")) {
    c.split.seed = as_u64(v, key);
    c.split_seed_set = true;
  } else if (is("metrics.logauc_lambda"))
    c.metrics.logauc_lambda = as_double(v, key);
  else if (is("metrics.roc_fpr"))
    c.metrics.roc_fpr = as_double(v, key);
  else if (is("metrics.ef_fraction"))
    c.metrics.ef_fraction = as_double(v, key);
  else if (is("metrics.threshold"))
    c.metrics.threshold = as_double(v, key);
  else if (is("attention.bins"))
    c.attention.bins = as_int(v, key);
  else if (is("attention.per_example"))
    c.attention.per_example = as_bool(v, key);
  else if (is("io.manifest"))
    c.io.manifest = as_string(v, key);
  else if (is("io.out"))
    c.io.out = as_string(v, key);
  else if (is("io.checkpoint"))
    c.io.checkpoint = as_string(v, key);
  else if (is("io.receptor"))
    c.io.receptor = as_string(v, key);
  else if (is("io.ligand"))
    c.io.ligand = as_string(v, key);
  else if (is("io.reference"))
    c.io.reference = as_string(v, key);
  else if (is("io.baseline_checkpoint"))
    c.io.baseline_checkpoint = as_string(v, key);
  else if (is("io.top_k"))
    c.io.top_k = static_cast<std::size_t>(as_u64(v, key));
  else if (is("workers"))
    c.workers = as_int(v, key);
  else
    throw ConfigError("unknown config key " + key);
}

ordered_json resolved_tree(const RunConfig &c) {
  ordered_json j;
  ordered_json &f = j["feature"];
  f["pocket_cutoff"] = c.feature.pocket_cutoff;
  f["inter_cutoff"] = c.feature.inter_cutoff;
  f["rbf_centers"] = c.feature.rbf_centers;
  f["rbf_sigma"] = c.feature.rbf_sigma;
  f["k_pe"] = c.feature.k_pe;
  f["atom_symbol_only"] = c.feature.atom_symbol_only;
  f["drop_inter_distance"] = c.feature.drop_inter_distance;
  f["inter_distance_only"] = c.feature.inter_distance_only;
  f["drop_complex_intra_edge_features"] =
      c.feature.drop_complex_intra_edge_features;
  ordered_json &m = j["model"];
  m["d_model"] = c.model.d_model;
  m["n_heads"] = c.model.n_heads;
  m["n_blocks"] = c.model.n_blocks;
  m["d_ffn"] = c.model.d_ffn;
  m["dropout"] = c.model.dropout;
  m["k_pe"] = c.model.k_pe;
  m["one_way"] = c.model.one_way;
  m["head_kind"] = head_kind_name(c.model.head_kind);
  m["aggregate"] = aggregate_name(c.model.aggregate);
  ordered_json &t = j["train"];
  t["lr"] = c.train.lr;
  t["batch"] = c.train.batch;
  t["max_epochs"] = c.train.max_epochs;
  t["patience"] = c.train.patience;
  t["seed"] = c.train.seed;
  t["pos_weight_auto"] = c.train.pos_weight_auto;
  ordered_json &s = j["split"];
  s["train"] = c.split.r_train;
  s["val"] = c.split.r_val;
  s["test"] = c.split.r_test;
  s["seed"] = c.split.seed;
  ordered_json &me = j["metrics"];
  me["logauc_lambda"] = c.metrics.logauc_lambda;
  me["roc_fpr"] = c.metrics.roc_fpr;
  me["ef_fraction"] = c.metrics.ef_fraction;
  me["threshold"] = c.metrics.threshold;
  ordered_json &a = j["attention"];
  a["bins"] = c.attention.bins;
  a["per_example"] = c.attention.per_example;
  ordered_json &io = j["io"];
  io["manifest"] = c.io.manifest;
  io["out"] = c.io.out;
  io["checkpoint"] = c.io.checkpoint;
  io["receptor"] = c.io.receptor;
  io["ligand"] = c.io.ligand;
  io["reference"] = c.io.reference;
  io["baseline_checkpoint"] = c.io.baseline_checkpoint;
  io["top_k"] = c.io.top_k;
  j["workers"] = c.workers;
  return j;
}

} // namespace

RunConfig run_config_from_json_text(const std::string &text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception &e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object())
    throw ConfigError("config root must be a JSON object");
  RunConfig cfg;
  for (const auto &[section, value] : root.items()) {
    if (section == "workers") {
      apply_key(cfg, "workers", value);
      continue;
    }
    static const char *kSections[] = {"feature", "model",     "train",
                                      "split",   "metrics",   "attention",
                                      "io"};
    bool known = false;
    for (const char *s : kSections)
      known = known || section == s;
    if (!known)
      throw ConfigError("unknown config key " + section);
    if (!value.is_object())
      throw ConfigError("config section " + section + " must be an object");
    for (const auto &[leaf, v] : value.items())
      apply_key(cfg, section + "." + leaf, v);
  }
  return cfg;
}

RunConfig run_config_from_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return run_config_from_json_text(text.str());
}

void set_config_key(RunConfig &cfg, const std::string &key,
                    const std::string &value) {
  apply_key(cfg, key, json(value));
}

void apply_env_seed(RunConfig &cfg) {
  const char *env = std::getenv("IGT_SEED");
  if (env == nullptr)
    return;
  std::uint64_t seed = as_u64(json(std::string(env)), "IGT_SEED");
  if (!cfg.train_seed_set)
    cfg.train.seed = seed;
  if (!cfg.split_seed_set)
    cfg.split.seed = seed;
}

void finalize_run_config(RunConfig &cfg) {
  if (!cfg.model_k_pe_set)
    cfg.model.k_pe = cfg.feature.k_pe;
  else if (cfg.model.k_pe != cfg.feature.k_pe)
    throw ConfigError("model.k_pe must match feature.k_pe");
  cfg.feature.validate();
  cfg.model.validate();
  cfg.train.validate();
  cfg.split.validate();
  cfg.metrics.validate();
  cfg.attention.validate();
  if (cfg.workers < 1)
    throw ConfigError("workers must be at least 1");
}

std::string run_config_json(const RunConfig &cfg) {
  return resolved_tree(cfg).dump(2) + "\n";
}

std::vector<ConfigKeyInfo> config_key_table() {
  static const std::vector<std::pair<const char *, const char *>> kDocs = {
      {"feature.pocket_cutoff",
       "pocket radius around the ligand in Angstrom"},
      {"feature.inter_cutoff",
       "intermolecular contact cutoff in Angstrom"},
      {"feature.rbf_centers", "Gaussian distance basis size"},
      {"feature.rbf_sigma", "Gaussian distance basis width"},
      {"feature.k_pe", "Laplacian positional-encoding dimensions"},
      {"feature.atom_symbol_only",
       "ablation: zero all node features except element and molecule flag"},
      {"feature.drop_inter_distance",
       "ablation: zero distance values on intermolecular edges"},
      {"feature.inter_distance_only",
       "ablation: zero the bond-type block on every edge"},
      {"feature.drop_complex_intra_edge_features",
       "ablation: zero intramolecular edge features in the complex graph"},
      {"model.d_model", "embedding width"},
      {"model.n_heads", "attention heads per layer"},
      {"model.n_blocks", "stacked IGT blocks"},
      {"model.d_ffn", "feed-forward hidden width"},
      {"model.dropout", "dropout probability during training"},
      {"model.k_pe", "PE width seen by the model; synced from feature.k_pe"},
      {"model.one_way",
       "ablation: complex tower only, no intermolecular attention"},
      {"model.head_kind", "activity or pose head (same architecture)"},
      {"model.aggregate", "readout pooling: mean or sum"},
      {"train.lr", "Adam learning rate"},
      {"train.batch", "gradient-accumulation count per optimizer step"},
      {"train.max_epochs", "epoch cap"},
      {"train.patience", "epochs without val improvement before stopping"},
      {"train.seed", "training stream seed"},
      {"train.pos_weight_auto",
       "weight positives by inverse class frequency"},
      {"split.train", "target-level train fraction"},
      {"split.val", "target-level validation fraction"},
      {"split.test", "target-level test fraction"},
      {"split.seed", "split shuffle seed"},
      {"metrics.logauc_lambda", "adjusted LogAUC lower FPR bound"},
      {"metrics.roc_fpr", "ROC-enrichment FPR point"},
      {"metrics.ef_fraction", "enrichment-factor top fraction"},
      {"metrics.threshold", "balanced-accuracy decision threshold"},
      {"attention.bins", "attention histogram bin count"},
      {"attention.per_example",
       "histogram per-example scores instead of per-target means"},
      {"io.manifest", "input manifest (JSONL)"},
      {"io.out", "output directory"},
      {"io.checkpoint", "model checkpoint path"},
      {"io.receptor", "receptor PDB path"},
      {"io.ligand", "ligand poses SDF path"},
      {"io.reference", "reference ligand SDF path for pose RMSD"},
      {"io.baseline_checkpoint",
       "second checkpoint for side-by-side attention analysis"},
      {"io.top_k", "keep only the top K rows (0 keeps all)"},
      {"workers", "parallel evaluation workers"},
  };
  ordered_json flat;
  ordered_json tree = resolved_tree(RunConfig{});
  for (const auto &[section, value] : tree.items()) {
    if (value.is_object())
      for (const auto &[leaf, v] : value.items())
        flat[section + "." + leaf] = v;
    else
      flat[section] = value;
  }
  std::vector<ConfigKeyInfo> table;
  for (const auto &[key, doc] : kDocs) {
    const ordered_json &v = flat.at(key);
    std::string def = v.is_string() ? v.get<std::string>() : v.dump();
    table.push_back({key, doc, def});
  }
  return table;
}

} // namespace igt
