//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "igt/attention.hpp"
#include "igt/checkpoint.hpp"
#include "igt/dataset.hpp"
#include "igt/error.hpp"
#include "igt/evaluate.hpp"
#include "igt/fixtures.hpp"
#include "igt/gradcheck.hpp"
#include "igt/manifest.hpp"
#include "igt/model.hpp"
#include "igt/pdb.hpp"
#include "igt/run_config.hpp"
#include "igt/screen.hpp"
#include "igt/sdf.hpp"
#include "igt/split.hpp"
#include "igt/train.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  bool dump_config = false;
  // Dotted-key assignments in command-line order; applied over the file.
  std::vector<std::pair<std::string, std::string>> assignments;
};

void add_alias(CLI::App *sub, CommonOpts &opts, const std::string &flag,
               std::vector<std::string> keys, const std::string &help) {
  sub->add_option_function<std::string>(
      flag,
      [&opts, keys = std::move(keys)](const std::string &v) {
        for (const auto &k : keys)
          opts.assignments.emplace_back(k, v);
      },
      help);
}

void add_config_options(CLI::App *sub, CommonOpts &opts) {
  sub->add_option("--config", opts.config_path, "JSON run-config file");
  sub->add_flag("--dump-config", opts.dump_config,
                "Print the fully resolved config as JSON and exit");
  for (const auto &info : igt::config_key_table()) {
    sub->add_option_function<std::string>(
        "--" + info.key,
        [&opts, key = info.key](const std::string &v) {
          opts.assignments.emplace_back(key, v);
        },
        info.description + " [" + info.default_value + "]");
  }
  add_alias(sub, opts, "--manifest", {"io.manifest"}, "Alias for --io.manifest");
  add_alias(sub, opts, "--out", {"io.out"}, "Alias for --io.out");
  add_alias(sub, opts, "--checkpoint", {"io.checkpoint"},
            "Alias for --io.checkpoint");
  add_alias(sub, opts, "--receptor", {"io.receptor"}, "Alias for --io.receptor");
  add_alias(sub, opts, "--ligand", {"io.ligand"}, "Alias for --io.ligand");
  add_alias(sub, opts, "--reference", {"io.reference"},
            "Alias for --io.reference");
  add_alias(sub, opts, "--baseline-checkpoint", {"io.baseline_checkpoint"},
            "Alias for --io.baseline_checkpoint");
  add_alias(sub, opts, "--top-k", {"io.top_k"}, "Alias for --io.top_k");
  add_alias(sub, opts, "--seed", {"train.seed", "split.seed"},
            "Set train.seed and split.seed together");
}

// Precedence: flags over config file over IGT_SEED over defaults.
igt::RunConfig resolve_config(const CommonOpts &opts) {
  igt::RunConfig cfg;
  if (!opts.config_path.empty())
    cfg = igt::run_config_from_file(opts.config_path);
  for (const auto &[key, value] : opts.assignments)
    igt::set_config_key(cfg, key, value);
  igt::apply_env_seed(cfg);
  igt::finalize_run_config(cfg);
  return cfg;
}

void require(bool ok, const std::string &msg) {
  if (!ok)
    throw igt::ConfigError(msg);
}

std::string out_path(const igt::RunConfig &cfg, const std::string &name) {
  if (cfg.io.out.empty())
    return name;
  std::filesystem::create_directories(cfg.io.out);
  return cfg.io.out + "/" + name;
}

void write_lines(const std::string &path,
                 const std::vector<std::string> &lines) {
  std::ofstream out(path);
  if (!out)
    throw igt::Error("cannot open " + path + " for writing");
  for (const auto &line : lines)
    out << line << '\n';
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw igt::Error("cannot open " + path + " for writing");
  out << text;
}

std::vector<igt::TrainExample> to_train_examples(
    std::vector<igt::PreparedExample> prepared) {
  std::vector<igt::TrainExample> out;
  out.reserve(prepared.size());
  for (auto &p : prepared) {
    if (!p.record.label.has_value())
      throw igt::Error("record " + p.record.id + " has no label");
    out.push_back({p.record.id, p.record.target_id, std::move(p.graphs),
                   *p.record.label});
  }
  return out;
}

int run_prepare(const igt::RunConfig &cfg) {
  require(!cfg.io.manifest.empty(), "prepare requires io.manifest");
  auto records = igt::read_manifest(cfg.io.manifest);
  auto rows = igt::prepare_examples(records, cfg.feature);
  std::vector<std::string> lines;
  std::size_t failed = 0;
  for (const auto &r : rows) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["target_id"] = r.target_id;
    j["ok"] = r.ok;
    if (r.ok) {
      j["ligand_atoms"] = r.ligand_atoms;
      j["pocket_atoms"] = r.pocket_atoms;
      j["complex_nodes"] = r.complex_nodes;
      j["inter_edges"] = r.inter_edges;
    } else {
      j["error"] = r.error;
      ++failed;
    }
    lines.push_back(j.dump());
  }
  if (cfg.io.out.empty()) {
    for (const auto &l : lines)
      std::cout << l << '\n';
  } else {
    write_lines(out_path(cfg, "prepare.jsonl"), lines);
  }
  std::printf("prepared %zu records, %zu failed\n", rows.size(), failed);
  return failed == 0 ? 0 : 1;
}

int run_split(const igt::RunConfig &cfg) {
  require(!cfg.io.manifest.empty(), "split requires io.manifest");
  auto records = igt::read_manifest(cfg.io.manifest);
  auto parts = igt::split_records(records, cfg.split);
  igt::write_manifest(out_path(cfg, "train.jsonl"), parts.train);
  igt::write_manifest(out_path(cfg, "val.jsonl"), parts.val);
  igt::write_manifest(out_path(cfg, "test.jsonl"), parts.test);
  std::printf("split %zu records: train %zu, val %zu, test %zu\n",
              records.size(), parts.train.size(), parts.val.size(),
              parts.test.size());
  return 0;
}

int run_train(const igt::RunConfig &cfg) {
  require(!cfg.io.manifest.empty(), "train requires io.manifest");
  auto records = igt::read_manifest(cfg.io.manifest);
  auto parts = igt::split_records(records, cfg.split);
  auto train_set = to_train_examples(igt::load_examples(parts.train, cfg.feature));
  auto val_set = to_train_examples(igt::load_examples(parts.val, cfg.feature));

  igt::IgtParams params =
      igt::IgtParams::init(cfg.model, cfg.feature, cfg.train.seed);
  igt::TrainOutcome outcome =
      igt::run_training(std::move(params), train_set, val_set, cfg.train);

  write_text(out_path(cfg, "config.json"), igt::run_config_json(cfg));
  outcome.best_params.save(out_path(cfg, "model.igtc"));
  igt::write_igtc_file(out_path(cfg, "model.igtc.opt"), outcome.best_opt_state);

  std::vector<std::string> log_lines;
  for (const auto &e : outcome.log) {
    nlohmann::ordered_json j;
    j["row"] = "epoch";
    j["epoch"] = e.epoch;
    j["mean_loss"] = e.mean_loss;
    if (e.val_auroc.has_value())
      j["val_auroc"] = *e.val_auroc;
    else
      j["val_auroc"] = nullptr;
    j["wall_seconds"] = e.wall_seconds;
    log_lines.push_back(j.dump());
    std::printf("epoch %d mean_loss %.6f val_auroc %s\n", e.epoch, e.mean_loss,
                e.val_auroc ? std::to_string(*e.val_auroc).c_str() : "n/a");
  }
  nlohmann::ordered_json s;
  s["row"] = "summary";
  s["epochs"] = outcome.log.size();
  s["best_epoch"] = outcome.best_epoch;
  s["train_examples"] = train_set.size();
  s["val_examples"] = val_set.size();
  log_lines.push_back(s.dump());
  write_lines(out_path(cfg, "train_log.jsonl"), log_lines);
  std::printf("best epoch %d, checkpoint %s\n", outcome.best_epoch,
              out_path(cfg, "model.igtc").c_str());
  return 0;
}

int run_eval(const igt::RunConfig &cfg) {
  require(!cfg.io.manifest.empty(), "eval requires io.manifest");
  require(!cfg.io.checkpoint.empty(), "eval requires io.checkpoint");
  igt::IgtParams params = igt::IgtParams::load(cfg.io.checkpoint);
  auto records = igt::read_manifest(cfg.io.manifest);
  auto examples = igt::load_examples(records, params.feature_config());
  igt::EvalReport report =
      igt::evaluate(examples, params, cfg.metrics, cfg.workers);

  write_text(out_path(cfg, "eval_report.txt"), igt::format_eval_table(report));
  write_lines(out_path(cfg, "eval_report.jsonl"),
              igt::eval_report_lines(report));
  write_lines(out_path(cfg, "predictions.jsonl"), igt::prediction_lines(report));
  std::fputs(igt::format_eval_table(report).c_str(), stdout);
  if (!report.pooled.metrics.complete()) {
    std::fprintf(stderr, "eval: pooled metrics undefined: %s\n",
                 report.pooled.metrics.note.c_str());
    return 1;
  }
  return 0;
}

int run_screen(const igt::RunConfig &cfg) {
  require(!cfg.io.manifest.empty(), "screen requires io.manifest");
  require(!cfg.io.checkpoint.empty(), "screen requires io.checkpoint");
  igt::IgtParams params = igt::IgtParams::load(cfg.io.checkpoint);
  auto records = igt::read_manifest(cfg.io.manifest);
  auto examples = igt::load_examples(records, params.feature_config());
  auto results = igt::screen(examples, params, cfg.workers);
  write_lines(out_path(cfg, "screen.jsonl"),
              igt::screen_lines(results, cfg.io.top_k));
  std::size_t show = cfg.io.top_k > 0 ? cfg.io.top_k : std::size_t{10};
  for (std::size_t i = 0; i < results.size() && i < show; ++i)
    std::printf("%4zu  %-24s %.6f\n", results[i].rank, results[i].id.c_str(),
                results[i].probability);
  std::printf("screened %zu examples\n", results.size());
  return 0;
}

int run_rank_poses(const igt::RunConfig &cfg) {
  require(!cfg.io.receptor.empty(), "rank-poses requires io.receptor");
  require(!cfg.io.ligand.empty(), "rank-poses requires io.ligand");
  require(!cfg.io.checkpoint.empty(), "rank-poses requires io.checkpoint");
  igt::IgtParams params = igt::IgtParams::load(cfg.io.checkpoint);
  igt::Molecule receptor = igt::parse_pdb_file(cfg.io.receptor);
  std::vector<igt::Molecule> poses = igt::parse_sdf_file(cfg.io.ligand);
  igt::Molecule reference;
  bool have_ref = !cfg.io.reference.empty();
  if (have_ref)
    reference = igt::parse_sdf_file(cfg.io.reference).front();

  igt::PoseRanking ranking =
      igt::rank_poses(receptor, poses, params,
                      have_ref ? &reference : nullptr, cfg.workers);
  write_lines(out_path(cfg, "poses.jsonl"), igt::pose_lines(ranking));
  if (have_ref)
    write_lines(out_path(cfg, "hit_rate.csv"),
                igt::hit_rate_csv_lines(ranking));
  for (const auto &p : ranking.ranked) {
    if (p.rmsd_to_reference.has_value())
      std::printf("%4zu  pose %-4d %.6f  rmsd %.3f\n", p.rank, p.pose_index,
                  p.probability, *p.rmsd_to_reference);
    else
      std::printf("%4zu  pose %-4d %.6f\n", p.rank, p.pose_index,
                  p.probability);
  }
  return 0;
}

int run_attention(const igt::RunConfig &cfg) {
  require(!cfg.io.manifest.empty(), "analyze-attention requires io.manifest");
  require(!cfg.io.checkpoint.empty(), "analyze-attention requires io.checkpoint");
  igt::IgtParams params = igt::IgtParams::load(cfg.io.checkpoint);
  auto records = igt::read_manifest(cfg.io.manifest);
  auto examples = igt::load_examples(records, params.feature_config());
  igt::AttentionReport report =
      igt::attention_analysis(examples, params, cfg.attention, cfg.workers);
  write_lines(out_path(cfg, "attention.jsonl"), igt::attention_lines(report));
  write_lines(out_path(cfg, "attention_hist.csv"),
              igt::attention_histogram_csv(report));
  std::printf("scored %zu examples over %zu targets\n",
              report.per_example.size(), report.per_target.size());

  if (!cfg.io.baseline_checkpoint.empty()) {
    igt::IgtParams base = igt::IgtParams::load(cfg.io.baseline_checkpoint);
    auto base_examples = igt::load_examples(records, base.feature_config());
    igt::AttentionReport base_report =
        igt::attention_analysis(base_examples, base, cfg.attention,
                                cfg.workers);
    write_lines(out_path(cfg, "attention_baseline.jsonl"),
                igt::attention_lines(base_report));
    write_lines(out_path(cfg, "attention_hist_baseline.csv"),
                igt::attention_histogram_csv(base_report));
    std::printf("baseline scored %zu examples\n",
                base_report.per_example.size());
  }
  return 0;
}

int run_gradcheck(const igt::RunConfig &cfg) {
  igt::GradCheckReport report = igt::fixture_gradient_check(cfg.train.seed);
  std::printf("checked %zu parameter entries\n", report.n_params);
  std::printf("max relative error %.3e (%s[%zu]: analytic %.12e, "
              "numeric %.12e)\n",
              report.max_rel_err, report.worst.name.c_str(),
              report.worst.index, report.worst.analytic, report.worst.numeric);
  if (!report.pass()) {
    std::fprintf(stderr, "gradcheck: tolerance 1e-6 exceeded\n");
    return 1;
  }
  std::printf("gradcheck passed (tolerance 1e-6)\n");
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Intermolecular graph transformer toolkit"};
  app.require_subcommand(1);

  struct SubDef {
    const char *name;
    const char *help;
    int (*run)(const igt::RunConfig &);
  };
  const std::vector<SubDef> defs = {
      {"prepare", "Featurization preflight over a manifest", run_prepare},
      {"split", "Partition a manifest into train/val/test by target",
       run_split},
      {"train", "Train a model on the train/val parts of a manifest",
       run_train},
      {"eval", "Per-target and pooled metric report on a labeled manifest",
       run_eval},
      {"screen", "Rank manifest entries by predicted probability", run_screen},
      {"rank-poses", "Rank the poses of one ligand against a receptor",
       run_rank_poses},
      {"analyze-attention",
       "Mean intermolecular attention per example and target", run_attention},
      {"gradcheck",
       "Compare analytic gradients with finite differences on the bundled "
       "fixture",
       run_gradcheck},
  };

  std::vector<std::unique_ptr<CommonOpts>> opt_store;
  std::vector<std::pair<CLI::App *, const SubDef *>> subs;
  for (const auto &def : defs) {
    CLI::App *sub = app.add_subcommand(def.name, def.help);
    opt_store.push_back(std::make_unique<CommonOpts>());
    add_config_options(sub, *opt_store.back());
    subs.emplace_back(sub, &def);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i].first->parsed())
      continue;
    try {
      igt::RunConfig cfg = resolve_config(*opt_store[i]);
      if (opt_store[i]->dump_config) {
        std::fputs(igt::run_config_json(cfg).c_str(), stdout);
        return 0;
      }
      return subs[i].second->run(cfg);
    } catch (const igt::Error &e) {
      std::fprintf(stderr, "igt %s: %s\n", subs[i].second->name, e.what());
      return 1;
    } catch (const std::exception &e) {
      std::fprintf(stderr, "igt %s: unexpected error: %s\n",
                   subs[i].second->name, e.what());
      return 1;
    }
  }
  return 0;
}
