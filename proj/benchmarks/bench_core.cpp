//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "igt/featurize.hpp"
#include "igt/fixtures.hpp"
#include "igt/jacobi.hpp"
#include "igt/metrics.hpp"
#include "igt/model.hpp"
#include "igt/tape.hpp"
#include "igt/train.hpp"

namespace {

igt::FeatureConfig bench_features() {
  igt::FeatureConfig cfg;
  cfg.k_pe = 8;
  return cfg;
}

igt::ModelConfig bench_model(int d_model, int n_blocks) {
  igt::ModelConfig cfg;
  cfg.d_model = d_model;
  cfg.n_heads = d_model / 8;
  cfg.n_blocks = n_blocks;
  cfg.d_ffn = 2 * d_model;
  cfg.dropout = 0.0;
  cfg.k_pe = 8;
  return cfg;
}

void BM_FeaturizeComplex(benchmark::State &state) {
  const igt::Molecule receptor = igt::fixture_receptor();
  const igt::Molecule ligand = igt::fixture_ligand();
  const igt::FeatureConfig cfg = bench_features();
  for (auto _ : state) {
    igt::GraphSet graphs = igt::featurize_complex(receptor, ligand, cfg);
    benchmark::DoNotOptimize(graphs.complex.graph.node_feat.data());
  }
}
BENCHMARK(BM_FeaturizeComplex);

void BM_LaplacianPe(benchmark::State &state) {
  const igt::GraphSet graphs = igt::fixture_graphs(bench_features());
  const auto &edges = graphs.complex.graph.edges;
  const std::size_t n = graphs.complex.graph.n_nodes;
  for (auto _ : state) {
    igt::LaplacianPe pe =
        igt::laplacian_pe(n, edges, 8, igt::SignMode::kCanonical);
    benchmark::DoNotOptimize(pe.vectors.data());
  }
}
BENCHMARK(BM_LaplacianPe);

void BM_Forward(benchmark::State &state) {
  const igt::GraphSet graphs = igt::fixture_graphs(bench_features());
  const igt::IgtParams params = igt::IgtParams::init(
      bench_model(static_cast<int>(state.range(0)), 2), bench_features(), 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(igt::predict_probability(graphs, params));
}
BENCHMARK(BM_Forward)->Arg(32)->Arg(64);

void BM_ForwardBackward(benchmark::State &state) {
  const igt::GraphSet graphs = igt::fixture_graphs(bench_features());
  const igt::IgtParams params = igt::IgtParams::init(
      bench_model(static_cast<int>(state.range(0)), 2), bench_features(), 1);
  const igt::ad::Tensor target(1, 1, 1.0);
  for (auto _ : state) {
    igt::ad::Tape tape;
    igt::BoundParams bp(tape, params, true);
    igt::ForwardResult result =
        igt::model_forward(bp, graphs, false, nullptr);
    igt::ad::Var loss = igt::ad::bce_with_logits(result.logit, target);
    tape.backward(loss);
    benchmark::DoNotOptimize(loss.value().data());
  }
}
BENCHMARK(BM_ForwardBackward)->Arg(32)->Arg(64);

void BM_Auroc(benchmark::State &state) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  igt::ScoredSet s;
  for (int i = 0; i < 10000; ++i) {
    s.scores.push_back(unit(rng));
    s.labels.push_back(unit(rng) < 0.3 ? 1 : 0);
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(igt::auroc(s));
}
BENCHMARK(BM_Auroc);

void BM_JacobiEigen(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      m[i * n + j] = m[j * n + i] = unit(rng);
  for (auto _ : state) {
    igt::SymmetricEigen eig = igt::jacobi_eigen(m, n);
    benchmark::DoNotOptimize(eig.values.data());
  }
}
BENCHMARK(BM_JacobiEigen)->Arg(16)->Arg(35)->Arg(64);

} // namespace
