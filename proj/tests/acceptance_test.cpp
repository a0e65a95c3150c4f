//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

// Release gate for the toolkit. Each numbered check prints one PASS/FAIL
// line; the process exits with the number of failures. Reference values are
// recomputed here through deliberately naive code paths (pairwise counts,
// full threshold rescans, dense matrix products) that share nothing with
// the library internals beyond the metric definitions.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>

#include "igt/attention.hpp"
#include "igt/dataset.hpp"
#include "igt/error.hpp"
#include "igt/featurize.hpp"
#include "igt/fixtures.hpp"
#include "igt/gradcheck.hpp"
#include "igt/jacobi.hpp"
#include "igt/manifest.hpp"
#include "igt/metrics.hpp"
#include "igt/model.hpp"
#include "igt/molecule.hpp"
#include "igt/pdb.hpp"
#include "igt/sdf.hpp"
#include "igt/split.hpp"
#include "igt/train.hpp"

namespace {

namespace fs = std::filesystem;

void check(bool ok, const std::string &msg) {
  if (!ok)
    throw std::runtime_error(msg);
}

std::string fmt(const char *format, ...) {
  va_list args;
  va_start(args, format);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

// ---------------------------------------------------------------------------
// Shared small-model setup.

igt::FeatureConfig small_features() {
  igt::FeatureConfig cfg;
  cfg.k_pe = 4;
  return cfg;
}

igt::ModelConfig small_model() {
  igt::ModelConfig cfg;
  cfg.d_model = 16;
  cfg.n_heads = 2;
  cfg.n_blocks = 2;
  cfg.d_ffn = 24;
  cfg.dropout = 0.0;
  cfg.k_pe = 4;
  return cfg;
}

// ---------------------------------------------------------------------------
// Geometry helpers for the invariance checks.

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 random_rotation(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double a = angle(rng), b = angle(rng), c = angle(rng);
  const double ca = std::cos(a), sa = std::sin(a);
  const double cb = std::cos(b), sb = std::sin(b);
  const double cc = std::cos(c), sc = std::sin(c);
  // Rz(a) * Ry(b) * Rx(c)
  return {{{ca * cb, ca * sb * sc - sa * cc, ca * sb * cc + sa * sc},
           {sa * cb, sa * sb * sc + ca * cc, sa * sb * cc - ca * sc},
           {-sb, cb * sc, cb * cc}}};
}

igt::Molecule transformed(const igt::Molecule &mol, const Mat3 &r,
                          const igt::Vec3 &t) {
  igt::Molecule out = mol;
  for (igt::Atom &atom : out.atoms) {
    const igt::Vec3 p = atom.position;
    for (int i = 0; i < 3; ++i)
      atom.position[i] =
          r[i][0] * p[0] + r[i][1] * p[1] + r[i][2] * p[2] + t[i];
  }
  return out;
}

igt::Molecule relabeled(const igt::Molecule &mol, std::mt19937_64 &rng) {
  std::vector<int> perm(mol.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> inv(mol.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    inv[perm[i]] = static_cast<int>(i);
  igt::Molecule out;
  out.name = mol.name;
  for (int old : perm)
    out.atoms.push_back(mol.atoms[old]);
  for (const igt::Bond &b : mol.bonds)
    out.bonds.push_back({inv[b.i], inv[b.j], b.order});
  return out;
}

// ---------------------------------------------------------------------------
// Naive metric twins. Each one resorts and recounts from scratch.

// Total order: score descending, input index ascending.
std::vector<std::size_t> twin_order(const igt::ScoredSet &s) {
  std::vector<std::size_t> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (s.scores[a] != s.scores[b])
      return s.scores[a] > s.scores[b];
    return a < b;
  });
  return order;
}

double twin_auroc(const igt::ScoredSet &s) {
  double wins = 0;
  double pairs = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.labels[i] != 1)
      continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s.labels[j] != 0)
        continue;
      pairs += 1.0;
      if (s.scores[i] > s.scores[j])
        wins += 1.0;
      else if (s.scores[i] == s.scores[j])
        wins += 0.5;
    }
  }
  return wins / pairs;
}

double twin_auprc(const igt::ScoredSet &s) {
  const std::vector<std::size_t> order = twin_order(s);
  double sum = 0;
  std::size_t tp = 0, n_pos = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (s.labels[order[k]] == 1) {
      ++tp;
      sum += static_cast<double>(tp) / static_cast<double>(k + 1);
    }
  }
  for (int l : s.labels)
    n_pos += static_cast<std::size_t>(l == 1);
  return sum / static_cast<double>(n_pos);
}

// ROC vertices recomputed with one full pass per distinct threshold.
std::vector<std::pair<double, double>> twin_roc(const igt::ScoredSet &s) {
  std::vector<double> thresholds = s.scores;
  std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  double n_pos = 0, n_neg = 0;
  for (int l : s.labels)
    (l == 1 ? n_pos : n_neg) += 1.0;
  std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
  for (double th : thresholds) {
    double tp = 0, fp = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.scores[i] >= th)
        (s.labels[i] == 1 ? tp : fp) += 1.0;
    pts.emplace_back(fp / n_neg, tp / n_pos);
  }
  return pts;
}

double twin_logauc(const igt::ScoredSet &s, double lambda) {
  const auto pts = twin_roc(s);
  double area = 0;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    double f0 = pts[k - 1].first, t0 = pts[k - 1].second;
    const double f1 = pts[k].first, t1 = pts[k].second;
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
  return (area - chance) / std::log10(1.0 / lambda);
}

double twin_roc_enrichment(const igt::ScoredSet &s, double fpr) {
  const auto pts = twin_roc(s);
  double at_vertex = -1.0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].first == fpr) {
      at_vertex = std::max(at_vertex, pts[k].second);
    } else if (pts[k].first > fpr) {
      if (at_vertex >= 0.0)
        return at_vertex / fpr;
      const auto &[f0, t0] = pts[k - 1];
      const auto &[f1, t1] = pts[k];
      return (t0 + (t1 - t0) * (fpr - f0) / (f1 - f0)) / fpr;
    }
  }
  return (at_vertex >= 0.0 ? at_vertex : 1.0) / fpr;
}

double twin_enrichment_factor(const igt::ScoredSet &s, double fraction) {
  const std::size_t n = s.size();
  const auto top = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(n)));
  const std::vector<std::size_t> order = twin_order(s);
  double hits = 0, n_pos = 0;
  for (std::size_t k = 0; k < top; ++k)
    hits += s.labels[order[k]] == 1 ? 1.0 : 0.0;
  for (int l : s.labels)
    n_pos += l == 1 ? 1.0 : 0.0;
  return (hits / static_cast<double>(top)) /
         (n_pos / static_cast<double>(n));
}

double twin_balanced_accuracy(const igt::ScoredSet &s, double threshold) {
  double tp = 0, tn = 0, pos = 0, neg = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.labels[i] == 1) {
      pos += 1.0;
      tp += s.scores[i] >= threshold ? 1.0 : 0.0;
    } else {
      neg += 1.0;
      tn += s.scores[i] < threshold ? 1.0 : 0.0;
    }
  }
  return 0.5 * (tp / pos + tn / neg);
}

igt::ScoredSet random_set(std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> size_dist(2, 200);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  igt::ScoredSet s;
  const std::size_t n = size_dist(rng);
  const bool quantized = unit(rng) < 0.5; // force score ties half the time
  for (std::size_t i = 0; i < n; ++i) {
    double score = unit(rng);
    if (quantized)
      score = std::round(score * 8.0) / 8.0;
    s.scores.push_back(score);
    s.labels.push_back(unit(rng) < 0.35 ? 1 : 0);
  }
  const auto pos = std::count(s.labels.begin(), s.labels.end(), 1);
  if (pos == 0)
    s.labels[size_dist(rng) % n] = 1;
  else if (static_cast<std::size_t>(pos) == n)
    s.labels[size_dist(rng) % n] = 0;
  return s;
}

// ---------------------------------------------------------------------------
// Subprocess helpers for the reproducibility check.

int run_cli(const std::string &args) {
  const std::string cmd =
      std::string(IGT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  check(static_cast<bool>(in), "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string without_wall_seconds(const std::string &text) {
  std::istringstream in(text);
  std::string out, line;
  while (std::getline(in, line)) {
    const std::size_t p = line.find(",\"wall_seconds\":");
    if (p != std::string::npos) {
      const std::size_t q = line.find_first_of(",}", p + 17);
      line.erase(p, q - p);
    }
    out += line + "\n";
  }
  return out;
}

void write_fixture_inputs(const fs::path &dir, int n_targets) {
  std::ofstream(dir / "receptor.pdb") << igt::fixture_receptor_pdb();
  std::ofstream(dir / "poses.sdf") << igt::fixture_poses_sdf();
  std::vector<igt::ExampleRecord> recs;
  for (int t = 0; t < n_targets; ++t)
    for (int pose : {0, 2}) {
      igt::ExampleRecord r;
      r.id = "t" + std::to_string(t) + "_p" + std::to_string(pose);
      r.target_id = "t" + std::to_string(t);
      r.receptor_path = (dir / "receptor.pdb").string();
      r.ligand_path = (dir / "poses.sdf").string();
      r.pose_index = pose;
      r.label = pose == 0 ? 1 : 0;
      recs.push_back(r);
    }
  igt::write_manifest((dir / "manifest.jsonl").string(), recs);
}

// ---------------------------------------------------------------------------
// Criteria.

std::string criterion_gradients() {
  const auto t0 = std::chrono::steady_clock::now();
  const igt::GradCheckReport report = igt::fixture_gradient_check(91);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  check(report.max_rel_err < 1e-6,
        fmt("max relative error %.3e (worst %s[%zu])", report.max_rel_err,
            report.worst.name.c_str(), report.worst.index));
  check(secs < 60.0, fmt("took %.1f s, budget 60 s", secs));
  return fmt("max rel err %.3e over %zu entries in %.1f s", report.max_rel_err,
             report.n_params, secs);
}

std::string criterion_rigid_motion() {
  const igt::Molecule rec = igt::fixture_receptor();
  const igt::Molecule lig = igt::fixture_ligand();
  const igt::IgtParams params =
      igt::IgtParams::init(small_model(), small_features(), 41);
  const double base = igt::predict(rec, lig, params);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> shift(-10.0, 10.0);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Mat3 r = random_rotation(rng);
    const igt::Vec3 t{shift(rng), shift(rng), shift(rng)};
    const double p =
        igt::predict(transformed(rec, r, t), transformed(lig, r, t), params);
    worst = std::max(worst, std::fabs(p - base));
  }
  check(worst < 1e-6, fmt("probability drifted by %.3e", worst));
  return fmt("100 rigid motions, max drift %.3e", worst);
}

std::string criterion_relabeling() {
  const igt::Molecule rec = igt::fixture_receptor();
  const igt::Molecule lig = igt::fixture_ligand();
  const igt::IgtParams params =
      igt::IgtParams::init(small_model(), small_features(), 41);
  const double base = igt::predict(rec, lig, params);
  std::mt19937_64 rng(11);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double p =
        igt::predict(relabeled(rec, rng), relabeled(lig, rng), params);
    worst = std::max(worst, std::fabs(p - base));
  }
  check(worst < 1e-6, fmt("probability drifted by %.3e", worst));
  return fmt("100 atom relabelings, max drift %.3e", worst);
}

std::string criterion_metric_twins() {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> lambda_dist(0.001, 0.5);
  std::uniform_real_distribution<double> frac_dist(0.01, 1.0);
  double worst = 0;
  auto compare = [&](double a, double b, const char *name, std::size_t set) {
    const double d = std::fabs(a - b);
    worst = std::max(worst, d);
    check(d <= 1e-12,
          fmt("%s disagrees by %.3e on set %zu (%.17g vs %.17g)", name, d,
              set, a, b));
  };
  for (std::size_t i = 0; i < 1000; ++i) {
    const igt::ScoredSet s = random_set(rng);
    const double lambda = lambda_dist(rng);
    const double fpr = frac_dist(rng);
    const double frac = frac_dist(rng);
    compare(igt::auroc(s), twin_auroc(s), "auroc", i);
    compare(igt::auprc(s), twin_auprc(s), "auprc", i);
    compare(igt::adjusted_logauc(s, lambda), twin_logauc(s, lambda), "logauc",
            i);
    compare(igt::roc_enrichment(s, fpr), twin_roc_enrichment(s, fpr),
            "roc_enrichment", i);
    compare(igt::enrichment_factor(s, frac), twin_enrichment_factor(s, frac),
            "enrichment_factor", i);
    compare(igt::balanced_accuracy(s, 0.5), twin_balanced_accuracy(s, 0.5),
            "balanced_accuracy", i);
  }
  for (const auto &[n_pos, n_neg] :
       std::vector<std::pair<int, int>>{{1, 1}, {5, 100}, {50, 50}}) {
    igt::ScoredSet s;
    for (int i = 0; i < n_pos; ++i) {
      s.scores.push_back(0.9 - 0.001 * i);
      s.labels.push_back(1);
    }
    for (int i = 0; i < n_neg; ++i) {
      s.scores.push_back(0.3 - 0.001 * i);
      s.labels.push_back(0);
    }
    check(igt::auroc(s) == 1.0,
          fmt("perfect separation auroc %.17g", igt::auroc(s)));
    check(igt::auprc(s) == 1.0,
          fmt("perfect separation auprc %.17g", igt::auprc(s)));
  }
  return fmt("6 metrics x 1000 sets, max deviation %.3e; separated sets "
             "exactly 1",
             worst);
}

std::string criterion_pose_labels() {
  igt::Molecule a = igt::fixture_ligand();
  igt::Molecule b = a;
  for (igt::Atom &atom : b.atoms) {
    atom.position[0] += 3.0;
    atom.position[1] += 4.0;
  }
  const double r = igt::rmsd(a, b);
  check(std::fabs(r - 5.0) <= 1e-12, fmt("translated rmsd %.17g", r));

  const std::vector<std::pair<double, igt::PoseLabel>> bands = {
      {0.0, igt::PoseLabel::kPositive},      {1.456, igt::PoseLabel::kPositive},
      {1.999999, igt::PoseLabel::kPositive}, {2.0, igt::PoseLabel::kDiscard},
      {3.0, igt::PoseLabel::kDiscard},       {4.0, igt::PoseLabel::kDiscard},
      {4.000001, igt::PoseLabel::kNegative}, {9.5, igt::PoseLabel::kNegative}};
  for (const auto &[value, expected] : bands)
    check(igt::pose_label(value) == expected,
          fmt("pose_label(%g) off its band", value));
  return fmt("(3,4,0) translation rmsd %.17g; all band edges correct", r);
}

std::string criterion_eigens() {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> n_dist(2, 40);
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = n_dist(rng);
    std::set<std::pair<int, int>> undirected;
    std::uniform_int_distribution<int> node(0, n - 1);
    const int target_edges = 1 + node(rng) + n / 2;
    for (int e = 0; e < target_edges; ++e) {
      int i = node(rng), j = node(rng);
      if (i == j)
        continue;
      undirected.insert({std::min(i, j), std::max(i, j)});
    }
    if (undirected.empty())
      undirected.insert({0, 1});
    std::vector<std::pair<int, int>> edges;
    for (const auto &[i, j] : undirected) {
      edges.emplace_back(i, j);
      edges.emplace_back(j, i);
    }
    const igt::LaplacianPe pe =
        igt::laplacian_pe(n, edges, 8, igt::SignMode::kCanonical);
    const std::vector<double> lap = igt::normalized_laplacian(n, edges);
    for (std::size_t col = 0; col < pe.values.size(); ++col) {
      for (int row = 0; row < n; ++row) {
        double lv = 0;
        for (int k = 0; k < n; ++k)
          lv += lap[static_cast<std::size_t>(row) * n + k] *
                pe.vectors.at(k, col);
        const double resid =
            std::fabs(lv - pe.values[col] * pe.vectors.at(row, col));
        worst = std::max(worst, resid);
        check(resid < 1e-8,
              fmt("residual %.3e on graph %d column %zu", resid, trial, col));
      }
    }
  }
  const std::vector<std::pair<int, int>> k2 = {{0, 1}, {1, 0}};
  const igt::SymmetricEigen eig =
      igt::jacobi_eigen(igt::normalized_laplacian(2, k2), 2);
  check(std::fabs(eig.values[0] - 0.0) <= 1e-10 &&
            std::fabs(eig.values[1] - 2.0) <= 1e-10,
        fmt("K2 eigenvalues {%.12g, %.12g}", eig.values[0], eig.values[1]));
  return fmt("100 graphs, max |Lv - lv| %.3e; K2 spectrum {0, 2}", worst);
}

std::string criterion_inter_attention() {
  // Row-stochasticity of every attention matrix in a real forward pass.
  const igt::GraphSet graphs = igt::fixture_graphs(small_features());
  const igt::IgtParams params =
      igt::IgtParams::init(small_model(), small_features(), 51);
  igt::AttentionTrace trace;
  (void)igt::predict_probability(graphs, params, &trace);
  double worst_row = 0;
  auto scan = [&worst_row](const igt::ad::Tensor &m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      double sum = 0;
      for (std::size_t j = 0; j < m.cols(); ++j)
        sum += m.at(i, j);
      worst_row = std::max(worst_row, std::fabs(sum - 1.0));
    }
  };
  for (const igt::BlockTrace &block : trace.blocks) {
    for (const auto &h : block.ligand_heads)
      scan(h);
    for (const auto &h : block.receptor_heads)
      scan(h);
    for (const auto &h : block.complex_heads)
      scan(h);
    scan(block.inter_weights);
  }
  check(worst_row < 1e-9, fmt("attention row sum off by %.3e", worst_row));

  // Zero embeddings make the dense attention uniform: the score must be the
  // exact machine number 1/8 on a 4 ligand + 4 receptor fixture.
  std::vector<igt::MoleculeTag> tags(8, igt::MoleculeTag::kLigand);
  for (int i = 4; i < 8; ++i)
    tags[i] = igt::MoleculeTag::kReceptor;
  const double uniform =
      igt::mean_inter_attention(igt::ad::Tensor(8, 16, 0.0), tags);
  check(uniform == 0.125, fmt("zero-embedding score %.17g, want 0.125",
                              uniform));

  // The comparison harness: identical evaluation set, one histogram from the
  // three-tower model and one from its complex-only variant.
  std::vector<igt::PreparedExample> examples;
  const igt::Molecule rec = igt::fixture_receptor();
  const auto poses = igt::fixture_poses();
  for (int t = 0; t < 2; ++t)
    for (std::size_t p = 0; p < poses.size(); ++p) {
      igt::PreparedExample ex{
          {}, igt::featurize_complex(rec, poses[p], small_features())};
      ex.record.id = "t" + std::to_string(t) + "_p" + std::to_string(p);
      ex.record.target_id = "t" + std::to_string(t);
      examples.push_back(std::move(ex));
    }
  igt::ModelConfig one_way_cfg = small_model();
  one_way_cfg.one_way = true;
  igt::AttentionOptions opt;
  opt.bins = 20;
  const igt::AttentionReport three = igt::attention_analysis(
      examples, igt::IgtParams::init(small_model(), small_features(), 51),
      opt);
  const igt::AttentionReport one = igt::attention_analysis(
      examples, igt::IgtParams::init(one_way_cfg, small_features(), 51), opt);
  fs::create_directories("acceptance_out");
  const std::array<std::pair<const char *, const igt::AttentionReport *>, 2>
      outputs = {{{"attention_hist_three_way.csv", &three},
                  {"attention_hist_one_way.csv", &one}}};
  for (const auto &[name, report] : outputs) {
    const fs::path path = fs::path("acceptance_out") / name;
    std::ofstream out(path);
    for (const std::string &line : igt::attention_histogram_csv(*report))
      out << line << '\n';
    out.close();
    const std::string written = slurp(path);
    check(std::count(written.begin(), written.end(), '\n') == 21,
          "histogram " + path.string() + " malformed");
  }
  check(std::accumulate(three.histogram.begin(), three.histogram.end(),
                        std::size_t{0}) == 2 &&
            std::accumulate(one.histogram.begin(), one.histogram.end(),
                            std::size_t{0}) == 2,
        "histogram mass must equal the target count");
  return fmt("max row-sum error %.3e; zero-embedding score exactly 1/8; two "
             "histograms in acceptance_out/",
             worst_row);
}

std::pair<std::size_t, double> overfit(bool one_way) {
  igt::ModelConfig cfg = small_model();
  cfg.n_blocks = 1;
  cfg.one_way = one_way;
  const igt::Molecule rec = igt::fixture_receptor();
  const auto poses = igt::fixture_poses();
  const igt::GraphSet near = igt::featurize_complex(rec, poses[0],
                                                    small_features());
  const igt::GraphSet far = igt::featurize_complex(rec, poses[2],
                                                   small_features());
  std::vector<igt::TrainExample> examples;
  for (int i = 0; i < 20; ++i) {
    const bool active = i < 10;
    examples.push_back({"ex" + std::to_string(i), "t", active ? near : far,
                        active ? 1 : 0});
  }
  igt::TrainConfig tc;
  tc.lr = 3e-3;
  tc.batch = 20; // one full-batch optimizer step per epoch
  tc.seed = 3;
  igt::Trainer trainer(igt::IgtParams::init(cfg, small_features(), 3), tc);
  double loss = 1e300;
  while (trainer.steps_taken() < 2000) {
    loss = trainer.train_epoch(examples);
    if (loss < 0.05)
      break;
  }
  check(loss < 0.05, fmt("%s BCE stuck at %.4f after %zu steps",
                         one_way ? "one-way" : "three-way", loss,
                         trainer.steps_taken()));
  igt::ScoredSet s;
  for (const igt::TrainExample &ex : examples) {
    s.scores.push_back(igt::predict_probability(ex.graphs, trainer.params()));
    s.labels.push_back(ex.label);
  }
  check(igt::auroc(s) == 1.0,
        fmt("training-set auroc %.12g", igt::auroc(s)));
  return {trainer.steps_taken(), loss};
}

std::string criterion_overfit() {
  const auto [steps3, loss3] = overfit(false);
  const auto [steps1, loss1] = overfit(true);
  return fmt("BCE three-way %.4f in %zu steps, one-way %.4f in %zu steps, "
             "train auroc 1.0",
             loss3, steps3, loss1, steps1);
}

std::string criterion_split_hygiene() {
  std::vector<igt::ExampleRecord> recs;
  for (int t = 0; t < 23; ++t)
    for (int i = 0; i < 2; ++i) {
      igt::ExampleRecord r;
      r.id = "u" + std::to_string(t) + "_" + std::to_string(i);
      r.target_id = "u" + std::to_string(t);
      r.receptor_path = "r";
      r.ligand_path = "l";
      r.pose_index = i;
      recs.push_back(r);
    }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    igt::SplitSpec spec;
    spec.seed = seed;
    const igt::SplitResult res = igt::split_records(recs, spec);
    std::set<std::string> train, val, test;
    for (const auto &r : res.train)
      train.insert(r.target_id);
    for (const auto &r : res.val)
      val.insert(r.target_id);
    for (const auto &r : res.test)
      test.insert(r.target_id);
    // floor(0.70 * 23) = 16, floor(0.15 * 23) = 3, remainder 4.
    check(train.size() == 16 && val.size() == 3 && test.size() == 4,
          fmt("seed %zu unit counts %zu/%zu/%zu", seed, train.size(),
              val.size(), test.size()));
    check(res.train.size() + res.val.size() + res.test.size() == recs.size(),
          fmt("seed %zu lost records", seed));
    for (const std::string &t : train)
      check(!val.count(t) && !test.count(t),
            fmt("seed %zu leaks %s out of train", seed, t.c_str()));
    for (const std::string &t : val)
      check(!test.count(t), fmt("seed %zu leaks %s out of val", seed,
                                t.c_str()));
  }
  igt::SplitSpec spec;
  spec.r_train = 0.5;
  spec.r_val = 0.25;
  spec.r_test = 0.25;
  const igt::SplitResult res = igt::split_records(recs, spec);
  std::set<std::string> train, val;
  for (const auto &r : res.train)
    train.insert(r.target_id);
  for (const auto &r : res.val)
    val.insert(r.target_id);
  // floor(0.5 * 23) = 11, floor(0.25 * 23) = 5, remainder 7.
  check(train.size() == 11 && val.size() == 5,
        "alternate ratio rounding off");
  return "100 seeds, 23 units: partitions disjoint, floor/floor/remainder "
         "counts exact";
}

std::string criterion_reproducibility() {
  const fs::path dir = fs::temp_directory_path() / "igt_acceptance_repro";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_fixture_inputs(dir, 4);
  const std::string common =
      " --manifest " + (dir / "manifest.jsonl").string() +
      " --model.d_model 16 --model.n_heads 2 --model.n_blocks 1"
      " --model.d_ffn 24 --feature.k_pe 4 --train.max_epochs 2"
      " --train.batch 2 --train.lr 0.001 --seed 13";
  for (const char *run : {"run1", "run2"}) {
    check(run_cli("train" + common + " --out " + (dir / run).string()) == 0,
          std::string("train ") + run + " failed");
    check(run_cli("eval --manifest " + (dir / "manifest.jsonl").string() +
                  " --checkpoint " + (dir / run / "model.igtc").string() +
                  " --out " + (dir / run / "eval").string()) == 0,
          std::string("eval ") + run + " failed");
  }
  for (const char *name : {"model.igtc", "model.igtc.opt", "config.json"})
    check(slurp(dir / "run1" / name) == slurp(dir / "run2" / name),
          std::string(name) + " differs between identical runs");
  check(without_wall_seconds(slurp(dir / "run1" / "train_log.jsonl")) ==
            without_wall_seconds(slurp(dir / "run2" / "train_log.jsonl")),
        "train logs differ beyond wall_seconds");
  for (const char *name :
       {"eval_report.txt", "eval_report.jsonl", "predictions.jsonl"})
    check(slurp(dir / "run1" / "eval" / name) ==
              slurp(dir / "run2" / "eval" / name),
          std::string(name) + " differs between identical runs");
  fs::remove_all(dir);
  return "checkpoints, optimizer state, logs and reports byte-identical "
         "across two seeded runs";
}

std::string criterion_parsers() {
  // Receptor: count heavy-atom records straight off the text.
  std::istringstream pdb_text(igt::fixture_receptor_pdb());
  std::string line;
  std::size_t textual_atoms = 0;
  while (std::getline(pdb_text, line)) {
    if (line.rfind("ATOM", 0) != 0 && line.rfind("HETATM", 0) != 0)
      continue;
    std::string element = line.size() >= 78 ? line.substr(76, 2) : "";
    element.erase(std::remove(element.begin(), element.end(), ' '),
                  element.end());
    if (element != "H")
      ++textual_atoms;
  }
  const igt::Molecule receptor = igt::parse_pdb(igt::fixture_receptor_pdb());
  check(receptor.size() == textual_atoms,
        fmt("receptor atoms %zu vs textual %zu", receptor.size(),
            textual_atoms));

  // Ligand: the counts line declares both totals.
  std::istringstream sdf_text(igt::fixture_ligand_sdf());
  for (int i = 0; i < 4; ++i)
    std::getline(sdf_text, line);
  const auto declared_atoms =
      static_cast<std::size_t>(std::stoi(line.substr(0, 3)));
  const auto declared_bonds =
      static_cast<std::size_t>(std::stoi(line.substr(3, 3)));
  const igt::Molecule ligand = igt::parse_sdf(igt::fixture_ligand_sdf())[0];
  check(ligand.size() == declared_atoms && ligand.bonds.size() ==
            declared_bonds,
        fmt("ligand %zu/%zu vs declared %zu/%zu", ligand.size(),
            ligand.bonds.size(), declared_atoms, declared_bonds));

  // Pose archive: one record per terminator.
  const std::string &poses_text = igt::fixture_poses_sdf();
  std::size_t terminators = 0;
  for (std::size_t p = poses_text.find("$$$$"); p != std::string::npos;
       p = poses_text.find("$$$$", p + 4))
    ++terminators;
  const auto poses = igt::parse_sdf(poses_text);
  check(poses.size() == terminators,
        fmt("%zu poses vs %zu terminators", poses.size(), terminators));
  for (const igt::Molecule &pose : poses)
    check(pose.size() == declared_atoms, "pose atom count mismatch");

  // Malformed inputs raise their specified error types.
  auto throws = [](auto fn, const char *what) {
    try {
      fn();
    } catch (const igt::ParseError &) {
      return;
    } catch (const igt::EmptyStructureError &) {
      return;
    }
    throw std::runtime_error(std::string("no parse error for ") + what);
  };

  std::string bad_coord = igt::fixture_receptor_pdb();
  bad_coord.replace(bad_coord.find("ATOM") + 32, 3, "a.b");
  try {
    (void)igt::parse_pdb(bad_coord);
    throw std::runtime_error("malformed coordinate accepted");
  } catch (const igt::ParseError &) {
  }
  try {
    (void)igt::parse_pdb("HEADER empty\nEND\n");
    throw std::runtime_error("empty structure accepted");
  } catch (const igt::EmptyStructureError &) {
  }

  igt::Molecule two;
  two.atoms.push_back({"C", {0, 0, 0}, 0, false, 0});
  two.atoms.push_back({"N", {1.4, 0, 0}, 0, false, 1});
  two.bonds.push_back({0, 1, igt::BondOrder::Single});
  const std::string good_sdf = igt::write_sdf(two);
  std::string v3000 = good_sdf;
  v3000.replace(v3000.find("V2000"), 5, "V3000");
  throws([&] { (void)igt::parse_sdf(v3000); }, "V3000 header");
  std::string bad_bond = good_sdf;
  bad_bond.replace(bad_bond.find("\n  1  2"), 7, "\n  1  3");
  throws([&] { (void)igt::parse_sdf(bad_bond); }, "out-of-range bond");

  auto parse_manifest_text = [](const std::string &text) {
    std::istringstream in(text);
    return igt::read_manifest(in);
  };
  const std::string record =
      R"({"id":"a","target_id":"t","receptor_path":"r","ligand_path":"l","pose_index":0})";
  try {
    (void)parse_manifest_text(record + "\n" + record + "\n");
    throw std::runtime_error("duplicate manifest id accepted");
  } catch (const igt::ParseError &e) {
    check(std::string(e.what()).find("line 2") != std::string::npos,
          "duplicate-id error lacks its line number");
  }
  throws(
      [&] {
        (void)parse_manifest_text(
            R"({"id":"a","target_id":"t","receptor_path":"r","ligand_path":"l","pose_index":0,"shoe_size":9})"
            "\n");
      },
      "unknown manifest key");
  return fmt("receptor %zu atoms, ligand %zu/%zu, %zu poses; malformed "
             "inputs rejected",
             textual_atoms, declared_atoms, declared_bonds, terminators);
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "gradient integrity", criterion_gradients},
      {2, "rigid-motion invariance", criterion_rigid_motion},
      {3, "permutation invariance", criterion_relabeling},
      {4, "metric oracle equivalence", criterion_metric_twins},
      {5, "pose labeling", criterion_pose_labels},
      {6, "laplacian eigensystem", criterion_eigens},
      {7, "intermolecular attention", criterion_inter_attention},
      {8, "overfit sanity", criterion_overfit},
      {9, "split hygiene", criterion_split_hygiene},
      {10, "reproducibility", criterion_reproducibility},
      {11, "parser conformance", criterion_parsers},
  };

  int failures = 0;
  for (const Criterion &c : criteria) {
    try {
      const std::string detail = c.run();
      std::printf("PASS %2d %-26s %s\n", c.id, c.name, detail.c_str());
    } catch (const std::exception &e) {
      ++failures;
      std::printf("FAIL %2d %-26s %s\n", c.id, c.name, e.what());
    }
    std::fflush(stdout);
  }
  if (failures > 0)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures;
}
