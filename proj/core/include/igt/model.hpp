//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_MODEL_HPP_
#define IGT_MODEL_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "igt/checkpoint.hpp"
#include "igt/featurize.hpp"
#include "igt/tape.hpp"

namespace igt {

enum class HeadKind { kActivity, kPose };
enum class Aggregate { kMean, kSum };

struct ModelConfig {
  int d_model = 64;
  int n_heads = 8;
  int n_blocks = 4;
  int d_ffn = 128;
  double dropout = 0.1;
  int k_pe = 8;
  bool one_way = false;
  HeadKind head_kind = HeadKind::kActivity;
  Aggregate aggregate = Aggregate::kMean;

  int d_head() const { return d_model / n_heads; }
  void validate() const;
};

/// All learned arrays, keyed "block{b}.{tower}.{role}" with towers ligand /
/// receptor / complex, plus "block{b}.inter.*", "embed.*" and "readout.*".
/// Creation (and checkpoint) order is fixed; initialization draws from a
/// single seeded stream so identical seeds give identical parameters.
class IgtParams {
public:
  static IgtParams init(const ModelConfig &model_cfg,
                        const FeatureConfig &feature_cfg, std::uint64_t seed);

  const ModelConfig &model_config() const { return model_cfg_; }
  const FeatureConfig &feature_config() const { return feature_cfg_; }

  NamedTensors &tensors() { return tensors_; }
  const NamedTensors &tensors() const { return tensors_; }
  const ad::Tensor &tensor(const std::string &name) const;
  bool has(const std::string &name) const;

  /// Checkpoint entries: "config.*" scalars first, then every parameter in
  /// creation order.
  NamedTensors to_checkpoint() const;
  static IgtParams from_checkpoint(const NamedTensors &entries);

  void save(const std::string &path) const;
  static IgtParams load(const std::string &path);

private:
  IgtParams(ModelConfig m, FeatureConfig f)
      : model_cfg_(m), feature_cfg_(f) {}

  void add(const std::string &name, ad::Tensor t);

  ModelConfig model_cfg_;
  FeatureConfig feature_cfg_;
  NamedTensors tensors_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Row-stochastic attention matrices captured during one forward pass.
struct BlockTrace {
  std::vector<ad::Tensor> ligand_heads;   // n_heads of [n_l x n_l]
  std::vector<ad::Tensor> receptor_heads; // n_heads of [n_r x n_r]
  std::vector<ad::Tensor> complex_heads;  // n_heads of [n_c x n_c]
  ad::Tensor inter_weights;               // [n_c x 3]
};

struct AttentionTrace {
  std::vector<BlockTrace> blocks;
};

struct ForwardResult {
  ad::Var logit;     // [1 x 1]
  ad::Var complex_h; // final-block complex embeddings [n_c x d_model]
};

/// H0 = node_feat * W_node + pos_enc * W_pe.
ad::Var embed(ad::Tape &tape, const MolGraph &graph, const ad::Var &w_node,
              const ad::Var &w_pe);

/// Tape-bound view of the parameters for one example's forward pass.
class BoundParams {
public:
  BoundParams(ad::Tape &tape, const IgtParams &params, bool requires_grad)
      : tape_(tape), params_(params), requires_grad_(requires_grad) {}

  ad::Var get(const std::string &name);
  ad::Tape &tape() { return tape_; }
  const IgtParams &params() const { return params_; }

  /// Gradient per parameter in creation order; zero tensors for parameters
  /// the forward pass never touched. Only valid after Tape::backward.
  NamedTensors collect_grads() const;

private:
  ad::Tape &tape_;
  const IgtParams &params_;
  bool requires_grad_;
  std::unordered_map<std::string, ad::Var> bound_;
};

/// One edge-biased multi-head attention layer plus feed-forward, residuals
/// and layer-norms, evaluated on one graph tower.
ad::Var gt_layer_forward(BoundParams &bp, const ad::Var &h,
                         const MolGraph &graph, const std::string &prefix,
                         bool training, std::mt19937_64 *dropout_rng,
                         std::vector<ad::Tensor> *head_trace = nullptr);

/// Candidate-mixture update of the complex tower from all three towers.
/// Identity under one_way.
ad::Var intermolecular_attention(BoundParams &bp, const ad::Var &h_ligand,
                                 const ad::Var &h_receptor,
                                 const ad::Var &h_complex,
                                 const ComplexGraph &cg, int block,
                                 ad::Tensor *weight_trace = nullptr);

struct GraphState {
  ad::Var ligand;
  ad::Var receptor;
  ad::Var complex;
};

GraphState igt_block(BoundParams &bp, const GraphState &state,
                     const GraphSet &graphs, int block, bool training,
                     std::mt19937_64 *dropout_rng,
                     BlockTrace *trace = nullptr);

ad::Var readout(BoundParams &bp, const GraphState &state,
                const GraphSet &graphs, bool training,
                std::mt19937_64 *dropout_rng);

/// Full forward pass: embed, n_blocks IGT blocks, readout. Returns the
/// pre-sigmoid logit and the final complex embeddings.
ForwardResult model_forward(BoundParams &bp, const GraphSet &graphs,
                            bool training, std::mt19937_64 *dropout_rng,
                            AttentionTrace *trace = nullptr);

/// Inference probability for an already-featurized example (no dropout).
double predict_probability(const GraphSet &graphs, const IgtParams &params,
                           AttentionTrace *trace = nullptr,
                           ad::Tensor *complex_h = nullptr);

/// End to end: pocket extraction, graph building with canonical PE signs,
/// forward pass, sigmoid.
double predict(const Molecule &receptor, const Molecule &ligand,
               const IgtParams &params);

} // namespace igt

#endif // IGT_MODEL_HPP_
