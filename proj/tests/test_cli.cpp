//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

// End-to-end checks of the command-line tool: every test spawns the real
// binary (path injected at compile time) against files in a scratch
// directory and inspects exit codes and outputs.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "igt/fixtures.hpp"
#include "igt/manifest.hpp"

namespace {

namespace fs = std::filesystem;

constexpr const char *kCli = IGT_CLI_PATH;

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path &p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count_lines(const fs::path &p) {
  std::ifstream in(p);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) ++n;
  return n;
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    ::unsetenv("IGT_SEED");
    dir_ = fs::temp_directory_path() /
           ("igt_cli_" +
            std::string(::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  void TearDown() override { fs::remove_all(dir_); }

  CmdResult run(const std::string &args, const std::string &env = "") {
    const fs::path out = dir_ / "_stdout.txt";
    const fs::path err = dir_ / "_stderr.txt";
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += std::string(kCli) + " " + args + " >" + out.string() + " 2>" +
           err.string();
    const int status = std::system(cmd.c_str());
    CmdResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path write_structures() {
    std::ofstream(dir_ / "receptor.pdb") << igt::fixture_receptor_pdb();
    std::ofstream(dir_ / "poses.sdf") << igt::fixture_poses_sdf();
    std::ofstream(dir_ / "reference.sdf") << igt::fixture_ligand_sdf();
    return dir_;
  }

  // n_targets units of two poses each: the reference pose labeled active,
  // the far pose labeled inactive.
  void write_manifest(const std::string &name, int n_targets) {
    std::vector<igt::ExampleRecord> recs;
    for (int t = 0; t < n_targets; ++t)
      for (int pose : {0, 2}) {
        igt::ExampleRecord r;
        r.id = "t" + std::to_string(t) + "_p" + std::to_string(pose);
        r.target_id = "t" + std::to_string(t);
        r.receptor_path = (dir_ / "receptor.pdb").string();
        r.ligand_path = (dir_ / "poses.sdf").string();
        r.pose_index = pose;
        r.label = pose == 0 ? 1 : 0;
        recs.push_back(r);
      }
    igt::write_manifest((dir_ / name).string(), recs);
  }

  std::string path(const std::string &name) {
    return (dir_ / name).string();
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpListsEverySubcommand) {
  const CmdResult r = run("--help");
  EXPECT_EQ(r.exit_code, 0);
  for (const char *sub :
       {"prepare", "split", "train", "eval", "screen", "rank-poses",
        "analyze-attention", "gradcheck"})
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
}

TEST_F(CliTest, RejectsMissingOrUnknownSubcommand) {
  EXPECT_NE(run("").exit_code, 0);
  EXPECT_NE(run("frobnicate").exit_code, 0);
}

TEST_F(CliTest, MissingRequiredPathFailsWithDiagnostic) {
  const CmdResult r = run("prepare");
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.err.find("igt prepare:"), std::string::npos);
  EXPECT_NE(r.err.find("io.manifest"), std::string::npos);

  const CmdResult e = run("eval --manifest nowhere.jsonl");
  EXPECT_EQ(e.exit_code, 1);
  EXPECT_NE(e.err.find("igt eval:"), std::string::npos);
}

TEST_F(CliTest, DumpConfigPrecedence) {
  std::ofstream(dir_ / "cfg.json")
      << R"({"model": {"d_model": 32, "n_heads": 4}})";

  const CmdResult defaults = run("train --dump-config");
  EXPECT_EQ(defaults.exit_code, 0);
  EXPECT_NE(defaults.out.find("\"d_model\": 64"), std::string::npos);

  const CmdResult from_file =
      run("train --config " + path("cfg.json") + " --dump-config");
  EXPECT_NE(from_file.out.find("\"d_model\": 32"), std::string::npos);

  const CmdResult flag_wins = run("train --config " + path("cfg.json") +
                                  " --model.d_model 48 --dump-config");
  EXPECT_NE(flag_wins.out.find("\"d_model\": 48"), std::string::npos);

  const CmdResult env_seed = run("train --dump-config", "IGT_SEED=9");
  EXPECT_NE(env_seed.out.find("\"seed\": 9"), std::string::npos);

  const CmdResult seed_flag = run("train --seed 5 --dump-config", "IGT_SEED=9");
  EXPECT_NE(seed_flag.out.find("\"seed\": 5"), std::string::npos);
  EXPECT_EQ(seed_flag.out.find("\"seed\": 9"), std::string::npos);

  const CmdResult bad_env = run("train --dump-config", "IGT_SEED=banana");
  EXPECT_EQ(bad_env.exit_code, 1);
}

TEST_F(CliTest, RejectsInvalidConfigValues) {
  EXPECT_EQ(run("train --model.d_model many").exit_code, 1);
  EXPECT_EQ(run("train --model.d_model 30").exit_code, 1); // not / n_heads
  EXPECT_EQ(run("train --workers 0").exit_code, 1);
  EXPECT_NE(run("train --no.such.key 1").exit_code, 0);
}

TEST_F(CliTest, PrepareReportsCountsAndFailures) {
  write_structures();
  write_manifest("good.jsonl", 2);
  const CmdResult ok =
      run("prepare --manifest " + path("good.jsonl") + " --out " + path("p1"));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_NE(ok.out.find("0 failed"), std::string::npos);
  EXPECT_EQ(count_lines(dir_ / "p1" / "prepare.jsonl"), 4u);
  const std::string report = slurp(dir_ / "p1" / "prepare.jsonl");
  EXPECT_NE(report.find("\"complex_nodes\":35"), std::string::npos);
  EXPECT_NE(report.find("\"ligand_atoms\":12"), std::string::npos);

  // One record pointing at a missing receptor flips the exit code.
  auto recs = igt::read_manifest(path("good.jsonl"));
  recs[1].receptor_path = path("missing.pdb");
  igt::write_manifest(path("mixed.jsonl"), recs);
  const CmdResult bad =
      run("prepare --manifest " + path("mixed.jsonl") + " --out " + path("p2"));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.out.find("1 failed"), std::string::npos);
  const std::string mixed = slurp(dir_ / "p2" / "prepare.jsonl");
  EXPECT_NE(mixed.find("\"ok\":false"), std::string::npos);
}

TEST_F(CliTest, SplitWritesDisjointPartitions) {
  write_structures();
  write_manifest("m.jsonl", 7); // 14 records over 7 targets
  const CmdResult r = run("split --manifest " + path("m.jsonl") +
                          " --out " + path("s") + " --split.seed 3");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(count_lines(dir_ / "s" / "train.jsonl"), 8u); // 4 targets
  EXPECT_EQ(count_lines(dir_ / "s" / "val.jsonl"), 2u);   // 1 target
  EXPECT_EQ(count_lines(dir_ / "s" / "test.jsonl"), 4u);  // 2 targets

  std::set<std::string> targets;
  std::size_t total = 0;
  for (const char *f : {"train.jsonl", "val.jsonl", "test.jsonl"}) {
    const auto recs = igt::read_manifest((dir_ / "s" / f).string());
    total += recs.size();
    for (const auto &rec : recs) targets.insert(rec.target_id);
  }
  EXPECT_EQ(total, 14u);
  EXPECT_EQ(targets.size(), 7u);
}

TEST_F(CliTest, TrainEvalScreenRankAnalyzeFlow) {
  write_structures();
  write_manifest("m.jsonl", 4);
  const std::string small =
      " --model.d_model 16 --model.n_heads 2 --model.n_blocks 1"
      " --model.d_ffn 24 --feature.k_pe 4 --train.max_epochs 2"
      " --train.batch 2 --train.lr 0.001 --seed 11";

  const CmdResult train = run("train --manifest " + path("m.jsonl") +
                              " --out " + path("run") + small);
  ASSERT_EQ(train.exit_code, 0) << train.err;
  EXPECT_TRUE(fs::exists(dir_ / "run" / "model.igtc"));
  EXPECT_TRUE(fs::exists(dir_ / "run" / "model.igtc.opt"));
  EXPECT_TRUE(fs::exists(dir_ / "run" / "config.json"));
  // Two epoch rows plus the summary row.
  EXPECT_EQ(count_lines(dir_ / "run" / "train_log.jsonl"), 3u);
  EXPECT_NE(slurp(dir_ / "run" / "config.json").find("\"d_model\": 16"),
            std::string::npos);

  const std::string ckpt = " --checkpoint " + path("run") + "/model.igtc";

  const CmdResult eval = run("eval --manifest " + path("m.jsonl") + ckpt +
                             " --out " + path("ev"));
  ASSERT_EQ(eval.exit_code, 0) << eval.err;
  EXPECT_EQ(count_lines(dir_ / "ev" / "predictions.jsonl"), 8u);
  const std::string table = slurp(dir_ / "ev" / "eval_report.txt");
  EXPECT_NE(table.find("pooled"), std::string::npos);
  EXPECT_NE(table.find("macro"), std::string::npos);
  EXPECT_NE(table.find("t0"), std::string::npos);
  // options row + 4 target rows + macro + pooled
  EXPECT_EQ(count_lines(dir_ / "ev" / "eval_report.jsonl"), 7u);

  // A single-class manifest leaves the pooled metrics undefined.
  {
    auto recs = igt::read_manifest(path("m.jsonl"));
    recs.resize(2);
    recs[1] = recs[0];
    recs[1].id = "copy";
    igt::write_manifest(path("ones.jsonl"), recs);
  }
  const CmdResult degenerate =
      run("eval --manifest " + path("ones.jsonl") + ckpt + " --out " +
          path("deg"));
  EXPECT_EQ(degenerate.exit_code, 1);
  EXPECT_NE(degenerate.err.find("pooled metrics undefined"),
            std::string::npos);

  const CmdResult screen =
      run("screen --manifest " + path("m.jsonl") + ckpt + " --out " +
          path("sc") + " --top-k 3 --workers 2");
  ASSERT_EQ(screen.exit_code, 0) << screen.err;
  EXPECT_EQ(count_lines(dir_ / "sc" / "screen.jsonl"), 3u);

  const CmdResult poses =
      run("rank-poses --receptor " + path("receptor.pdb") + " --ligand " +
          path("poses.sdf") + " --reference " + path("reference.sdf") + ckpt +
          " --out " + path("rp"));
  ASSERT_EQ(poses.exit_code, 0) << poses.err;
  EXPECT_EQ(count_lines(dir_ / "rp" / "poses.jsonl"), 3u);
  EXPECT_EQ(count_lines(dir_ / "rp" / "hit_rate.csv"), 4u);
  EXPECT_NE(slurp(dir_ / "rp" / "hit_rate.csv").find("k,hit_rate"),
            std::string::npos);

  const CmdResult attn = run("analyze-attention --manifest " + path("m.jsonl") +
                             ckpt + " --out " + path("at") +
                             " --attention.bins 5 --baseline-checkpoint " +
                             path("run") + "/model.igtc");
  ASSERT_EQ(attn.exit_code, 0) << attn.err;
  // 8 example rows + 4 target rows.
  EXPECT_EQ(count_lines(dir_ / "at" / "attention.jsonl"), 12u);
  EXPECT_EQ(count_lines(dir_ / "at" / "attention_hist.csv"), 6u);
  EXPECT_TRUE(fs::exists(dir_ / "at" / "attention_baseline.jsonl"));
  EXPECT_TRUE(fs::exists(dir_ / "at" / "attention_hist_baseline.csv"));
}

TEST_F(CliTest, RankPosesWithoutReferenceSkipsHitRate) {
  write_structures();
  write_manifest("m.jsonl", 3);
  const std::string small =
      " --model.d_model 16 --model.n_heads 2 --model.n_blocks 1"
      " --model.d_ffn 24 --feature.k_pe 4 --train.max_epochs 1"
      " --train.batch 2 --train.lr 0.001 --seed 2";
  const CmdResult train = run("train --manifest " + path("m.jsonl") +
                              " --out " + path("run") + small);
  ASSERT_EQ(train.exit_code, 0) << train.err;

  const CmdResult poses =
      run("rank-poses --receptor " + path("receptor.pdb") + " --ligand " +
          path("poses.sdf") + " --checkpoint " + path("run") + "/model.igtc" +
          " --out " + path("rp"));
  ASSERT_EQ(poses.exit_code, 0) << poses.err;
  EXPECT_EQ(count_lines(dir_ / "rp" / "poses.jsonl"), 3u);
  EXPECT_FALSE(fs::exists(dir_ / "rp" / "hit_rate.csv"));
  EXPECT_NE(slurp(dir_ / "rp" / "poses.jsonl").find("\"rmsd\":null"),
            std::string::npos);
}

} // namespace
