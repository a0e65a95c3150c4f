//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/model.hpp"

#include <cmath>
#include <utility>

#include "igt/error.hpp"

namespace igt {

namespace {

constexpr double kMaskValue = -1e30;

double sigmoid_scalar(double z) {
  if (z >= 0)
    return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

class InitStream {
public:
  explicit InitStream(std::uint64_t seed) : rng_(seed) {}

  // Uniform on [-bound, bound).
  double draw(double bound) {
    const double u =
        static_cast<double>(rng_() >> 11) * (1.0 / 9007199254740992.0);
    return bound * (2.0 * u - 1.0);
  }

private:
  std::mt19937_64 rng_;
};

std::string block_prefix(int b, const char *tower) {
  return "block" + std::to_string(b) + "." + tower;
}

} // namespace

void ModelConfig::validate() const {
  if (d_model <= 0 || n_heads <= 0 || n_blocks <= 0 || d_ffn <= 0)
    throw ConfigError("model dimensions must be positive");
  if (d_model % n_heads != 0)
    throw ConfigError("d_model " + std::to_string(d_model) +
                      " is not divisible by n_heads " +
                      std::to_string(n_heads));
  if (dropout < 0 || dropout >= 1)
    throw ConfigError("dropout must be in [0, 1)");
  if (k_pe < 1)
    throw ConfigError("k_pe must be at least 1");
}

void IgtParams::add(const std::string &name, ad::Tensor t) {
  index_.emplace(name, tensors_.size());
  tensors_.emplace_back(name, std::move(t));
}

IgtParams IgtParams::init(const ModelConfig &model_cfg,
                          const FeatureConfig &feature_cfg,
                          std::uint64_t seed) {
  model_cfg.validate();
  feature_cfg.validate();
  if (model_cfg.k_pe != feature_cfg.k_pe)
    throw ConfigError("model k_pe " + std::to_string(model_cfg.k_pe) +
                      " does not match feature k_pe " +
                      std::to_string(feature_cfg.k_pe));

  IgtParams p(model_cfg, feature_cfg);
  InitStream stream(seed);
  const std::size_t d = static_cast<std::size_t>(model_cfg.d_model);
  const std::size_t d_ffn = static_cast<std::size_t>(model_cfg.d_ffn);
  const std::size_t d_edge =
      static_cast<std::size_t>(edge_feature_dim(feature_cfg));

  auto matrix = [&](const std::string &name, std::size_t rows,
                    std::size_t cols) {
    const double bound = std::sqrt(1.0 / static_cast<double>(rows));
    ad::Tensor t(rows, cols);
    for (double &v : t.data())
      v = stream.draw(bound);
    p.add(name, std::move(t));
  };
  auto zeros = [&](const std::string &name, std::size_t cols) {
    p.add(name, ad::Tensor(1, cols));
  };
  auto ones = [&](const std::string &name, std::size_t cols) {
    p.add(name, ad::Tensor(1, cols, 1.0));
  };

  matrix("embed.node", kNodeFeatureDim, d);
  matrix("embed.pe", static_cast<std::size_t>(model_cfg.k_pe), d);
  for (int b = 0; b < model_cfg.n_blocks; ++b) {
    for (const char *tower : {"ligand", "receptor", "complex"}) {
      const std::string pre = block_prefix(b, tower) + ".";
      matrix(pre + "wq", d, d);
      matrix(pre + "wk", d, d);
      matrix(pre + "wv", d, d);
      matrix(pre + "wo", d, d);
      matrix(pre + "w_edge", d_edge, d);
      matrix(pre + "ffn1.weight", d, d_ffn);
      zeros(pre + "ffn1.bias", d_ffn);
      matrix(pre + "ffn2.weight", d_ffn, d);
      zeros(pre + "ffn2.bias", d);
      ones(pre + "ln1.gain", d);
      zeros(pre + "ln1.bias", d);
      ones(pre + "ln2.gain", d);
      zeros(pre + "ln2.bias", d);
    }
    const std::string pre = "block" + std::to_string(b) + ".inter.";
    matrix(pre + "w_ctx", d, d);
    matrix(pre + "u_complex", 1, d);
    matrix(pre + "u_counterpart", 1, d);
    matrix(pre + "u_pool", 1, d);
  }
  matrix("readout.fc1.weight", 3 * d, d_ffn);
  zeros("readout.fc1.bias", d_ffn);
  matrix("readout.fc2.weight", d_ffn, 1);
  zeros("readout.fc2.bias", 1);
  return p;
}

const ad::Tensor &IgtParams::tensor(const std::string &name) const {
  auto it = index_.find(name);
  if (it == index_.end())
    throw Error("unknown parameter: " + name);
  return tensors_[it->second].second;
}

bool IgtParams::has(const std::string &name) const {
  return index_.count(name) != 0;
}

namespace {

void push_scalar(NamedTensors &out, const std::string &name, double v) {
  out.emplace_back(name, ad::Tensor::scalar(v));
}

double take_scalar(const NamedTensors &entries, const std::string &name) {
  const ad::Tensor *t = find_tensor(entries, name);
  if (t == nullptr)
    throw ParseError("checkpoint missing entry " + name);
  return t->scalar_value();
}

} // namespace

NamedTensors IgtParams::to_checkpoint() const {
  NamedTensors out;
  const FeatureConfig &f = feature_cfg_;
  push_scalar(out, "config.feature.pocket_cutoff", f.pocket_cutoff);
  push_scalar(out, "config.feature.inter_cutoff", f.inter_cutoff);
  push_scalar(out, "config.feature.rbf_centers", f.rbf_centers);
  push_scalar(out, "config.feature.rbf_sigma", f.rbf_sigma);
  push_scalar(out, "config.feature.k_pe", f.k_pe);
  push_scalar(out, "config.feature.atom_symbol_only", f.atom_symbol_only);
  push_scalar(out, "config.feature.drop_inter_distance",
              f.drop_inter_distance);
  push_scalar(out, "config.feature.inter_distance_only",
              f.inter_distance_only);
  push_scalar(out, "config.feature.drop_complex_intra_edge_features",
              f.drop_complex_intra_edge_features);
  const ModelConfig &m = model_cfg_;
  push_scalar(out, "config.model.d_model", m.d_model);
  push_scalar(out, "config.model.n_heads", m.n_heads);
  push_scalar(out, "config.model.n_blocks", m.n_blocks);
  push_scalar(out, "config.model.d_ffn", m.d_ffn);
  push_scalar(out, "config.model.dropout", m.dropout);
  push_scalar(out, "config.model.k_pe", m.k_pe);
  push_scalar(out, "config.model.one_way", m.one_way);
  push_scalar(out, "config.model.head_kind",
              m.head_kind == HeadKind::kPose ? 1 : 0);
  push_scalar(out, "config.model.aggregate",
              m.aggregate == Aggregate::kSum ? 1 : 0);
  for (const auto &entry : tensors_)
    out.push_back(entry);
  return out;
}

IgtParams IgtParams::from_checkpoint(const NamedTensors &entries) {
  FeatureConfig f;
  f.pocket_cutoff = take_scalar(entries, "config.feature.pocket_cutoff");
  f.inter_cutoff = take_scalar(entries, "config.feature.inter_cutoff");
  f.rbf_centers =
      static_cast<int>(take_scalar(entries, "config.feature.rbf_centers"));
  f.rbf_sigma = take_scalar(entries, "config.feature.rbf_sigma");
  f.k_pe = static_cast<int>(take_scalar(entries, "config.feature.k_pe"));
  f.atom_symbol_only =
      take_scalar(entries, "config.feature.atom_symbol_only") != 0;
  f.drop_inter_distance =
      take_scalar(entries, "config.feature.drop_inter_distance") != 0;
  f.inter_distance_only =
      take_scalar(entries, "config.feature.inter_distance_only") != 0;
  f.drop_complex_intra_edge_features =
      take_scalar(entries, "config.feature.drop_complex_intra_edge_features") !=
      0;
  ModelConfig m;
  m.d_model = static_cast<int>(take_scalar(entries, "config.model.d_model"));
  m.n_heads = static_cast<int>(take_scalar(entries, "config.model.n_heads"));
  m.n_blocks = static_cast<int>(take_scalar(entries, "config.model.n_blocks"));
  m.d_ffn = static_cast<int>(take_scalar(entries, "config.model.d_ffn"));
  m.dropout = take_scalar(entries, "config.model.dropout");
  m.k_pe = static_cast<int>(take_scalar(entries, "config.model.k_pe"));
  m.one_way = take_scalar(entries, "config.model.one_way") != 0;
  m.head_kind = take_scalar(entries, "config.model.head_kind") != 0
                    ? HeadKind::kPose
                    : HeadKind::kActivity;
  m.aggregate = take_scalar(entries, "config.model.aggregate") != 0
                    ? Aggregate::kSum
                    : Aggregate::kMean;

  IgtParams p = init(m, f, 0);
  std::size_t n_params = 0;
  for (const auto &[name, tensor] : entries) {
    if (name.rfind("config.", 0) == 0)
      continue;
    ++n_params;
    auto it = p.index_.find(name);
    if (it == p.index_.end())
      throw ParseError("checkpoint has unexpected parameter " + name);
    ad::Tensor &dst = p.tensors_[it->second].second;
    if (!dst.same_shape(tensor))
      throw ShapeError("checkpoint parameter " + name + " has shape " +
                       tensor.shape_str() + ", expected " + dst.shape_str());
    dst = tensor;
  }
  if (n_params != p.tensors_.size())
    throw ParseError("checkpoint holds " + std::to_string(n_params) +
                     " parameters, expected " +
                     std::to_string(p.tensors_.size()));
  return p;
}

void IgtParams::save(const std::string &path) const {
  write_igtc_file(path, to_checkpoint());
}

IgtParams IgtParams::load(const std::string &path) {
  return from_checkpoint(read_igtc_file(path));
}

// ---- forward ------------------------------------------------------------

ad::Var BoundParams::get(const std::string &name) {
  auto it = bound_.find(name);
  if (it != bound_.end())
    return it->second;
  ad::Var v = tape_.input(params_.tensor(name), requires_grad_);
  bound_.emplace(name, v);
  return v;
}

NamedTensors BoundParams::collect_grads() const {
  NamedTensors grads;
  grads.reserve(params_.tensors().size());
  for (const auto &[name, tensor] : params_.tensors()) {
    auto it = bound_.find(name);
    if (it != bound_.end() && tape_.has_grad(it->second))
      grads.emplace_back(name, tape_.grad(it->second));
    else
      grads.emplace_back(name, ad::Tensor(tensor.rows(), tensor.cols()));
  }
  return grads;
}

ad::Var embed(ad::Tape &tape, const MolGraph &graph, const ad::Var &w_node,
              const ad::Var &w_pe) {
  ad::Var nodes = tape.constant(graph.node_feat);
  ad::Var pe = tape.constant(graph.pos_enc);
  return add(matmul(nodes, w_node), matmul(pe, w_pe));
}

namespace {

ad::Var maybe_dropout(ad::Var v, const ModelConfig &cfg, bool training,
                      std::mt19937_64 *rng) {
  if (!training || cfg.dropout <= 0)
    return v;
  if (rng == nullptr)
    throw ConfigError("training forward pass requires a dropout rng");
  return ad::dropout(v, cfg.dropout, *rng);
}

// Constant [d_model x n_heads] pooling matrix folding an edge projection
// into one scalar bias per head, scaled like the dot-product logits.
ad::Tensor head_pool_matrix(const ModelConfig &cfg) {
  const std::size_t d = static_cast<std::size_t>(cfg.d_model);
  const std::size_t heads = static_cast<std::size_t>(cfg.n_heads);
  const std::size_t d_head = static_cast<std::size_t>(cfg.d_head());
  ad::Tensor s(d, heads);
  const double w = 1.0 / std::sqrt(static_cast<double>(d_head));
  for (std::size_t h = 0; h < heads; ++h)
    for (std::size_t k = 0; k < d_head; ++k)
      s.at(h * d_head + k, h) = w;
  return s;
}

ad::Tensor neighbor_mask(const MolGraph &graph) {
  const std::size_t n = graph.n_nodes;
  ad::Tensor mask(n, n, kMaskValue);
  for (std::size_t i = 0; i < n; ++i)
    mask.at(i, i) = 0.0;
  for (const auto &[i, j] : graph.edges)
    mask.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 0.0;
  return mask;
}

} // namespace

ad::Var gt_layer_forward(BoundParams &bp, const ad::Var &h,
                         const MolGraph &graph, const std::string &prefix,
                         bool training, std::mt19937_64 *dropout_rng,
                         std::vector<ad::Tensor> *head_trace) {
  if (graph.n_nodes == 0)
    throw EmptyGraphError("attention layer applied to an empty graph");
  const ModelConfig &cfg = bp.params().model_config();
  ad::Tape &tape = bp.tape();
  const std::size_t n = graph.n_nodes;
  const std::size_t d_head = static_cast<std::size_t>(cfg.d_head());

  ad::Var q = matmul(h, bp.get(prefix + ".wq"));
  ad::Var k = matmul(h, bp.get(prefix + ".wk"));
  ad::Var v = matmul(h, bp.get(prefix + ".wv"));

  ad::Var edge_bias_heads; // [n_edges x n_heads]
  const bool has_edges = !graph.edges.empty();
  if (has_edges) {
    ad::Var edge_proj =
        matmul(tape.constant(graph.edge_feat), bp.get(prefix + ".w_edge"));
    edge_bias_heads = matmul(edge_proj, tape.constant(head_pool_matrix(cfg)));
  }
  ad::Var mask = tape.constant(neighbor_mask(graph));

  std::vector<ad::Var> messages;
  messages.reserve(static_cast<std::size_t>(cfg.n_heads));
  for (int head = 0; head < cfg.n_heads; ++head) {
    const std::size_t c0 = static_cast<std::size_t>(head) * d_head;
    ad::Var qh = slice_cols(q, c0, c0 + d_head);
    ad::Var kh = slice_cols(k, c0, c0 + d_head);
    ad::Var vh = slice_cols(v, c0, c0 + d_head);
    ad::Var logits = scale(matmul(qh, transpose(kh)),
                           1.0 / std::sqrt(static_cast<double>(d_head)));
    if (has_edges) {
      ad::Var bias = scatter_edge_bias(
          slice_cols(edge_bias_heads, static_cast<std::size_t>(head),
                     static_cast<std::size_t>(head) + 1),
          graph.edges, n);
      logits = add(logits, bias);
    }
    ad::Var alpha = row_softmax(add(logits, mask));
    if (head_trace != nullptr)
      head_trace->push_back(alpha.value());
    messages.push_back(matmul(alpha, vh));
  }

  ad::Var attn = matmul(concat_cols(messages), bp.get(prefix + ".wo"));
  attn = maybe_dropout(attn, cfg, training, dropout_rng);
  ad::Var h1 = layer_norm(add(h, attn), bp.get(prefix + ".ln1.gain"),
                          bp.get(prefix + ".ln1.bias"));

  ad::Var hidden = relu(add(matmul(h1, bp.get(prefix + ".ffn1.weight")),
                            repeat_row(bp.get(prefix + ".ffn1.bias"), n)));
  hidden = maybe_dropout(hidden, cfg, training, dropout_rng);
  ad::Var ffn = add(matmul(hidden, bp.get(prefix + ".ffn2.weight")),
                    repeat_row(bp.get(prefix + ".ffn2.bias"), n));
  return layer_norm(add(h1, ffn), bp.get(prefix + ".ln2.gain"),
                    bp.get(prefix + ".ln2.bias"));
}

ad::Var intermolecular_attention(BoundParams &bp, const ad::Var &h_ligand,
                                 const ad::Var &h_receptor,
                                 const ad::Var &h_complex,
                                 const ComplexGraph &cg, int block,
                                 ad::Tensor *weight_trace) {
  const ModelConfig &cfg = bp.params().model_config();
  if (cfg.one_way)
    return h_complex;
  ad::Tape &tape = bp.tape();
  const std::size_t n = cg.graph.n_nodes;
  const std::size_t n_lig = cg.n_ligand();
  const std::size_t n_rec = n - n_lig;
  const std::string pre = "block" + std::to_string(block) + ".inter.";

  // Complex nodes are ordered ligand first, so tower rows align by index.
  ad::Var counterpart = ad::concat_rows({h_ligand, h_receptor});
  ad::Var pooled_opposite = ad::concat_rows(
      {repeat_row(mean_rows(h_receptor), n_lig),
       repeat_row(mean_rows(h_ligand), n_rec)});

  ad::Var w_ctx = bp.get(pre + "w_ctx");
  auto logit_for = [&](const ad::Var &candidate, const char *u_name) {
    return matmul(ad::tanh(matmul(candidate, w_ctx)),
                  transpose(bp.get(pre + u_name)));
  };
  ad::Var logits =
      ad::concat_cols({logit_for(h_complex, "u_complex"),
                   logit_for(counterpart, "u_counterpart"),
                   logit_for(pooled_opposite, "u_pool")});
  ad::Var weights = row_softmax(logits); // [n x 3]
  if (weight_trace != nullptr)
    *weight_trace = weights.value();

  ad::Var mixed = add(
      add(scale_rows(h_complex, slice_cols(weights, 0, 1)),
          scale_rows(counterpart, slice_cols(weights, 1, 2))),
      scale_rows(pooled_opposite, slice_cols(weights, 2, 3)));

  const std::size_t d = static_cast<std::size_t>(cfg.d_model);
  ad::Var unit_gain = tape.constant(ad::Tensor(1, d, 1.0));
  ad::Var zero_bias = tape.constant(ad::Tensor(1, d));
  return layer_norm(mixed, unit_gain, zero_bias);
}

GraphState igt_block(BoundParams &bp, const GraphState &state,
                     const GraphSet &graphs, int block, bool training,
                     std::mt19937_64 *dropout_rng, BlockTrace *trace) {
  const ModelConfig &cfg = bp.params().model_config();
  GraphState next;
  if (!cfg.one_way) {
    next.ligand = gt_layer_forward(
        bp, state.ligand, graphs.ligand, block_prefix(block, "ligand"),
        training, dropout_rng,
        trace != nullptr ? &trace->ligand_heads : nullptr);
    next.receptor = gt_layer_forward(
        bp, state.receptor, graphs.receptor, block_prefix(block, "receptor"),
        training, dropout_rng,
        trace != nullptr ? &trace->receptor_heads : nullptr);
  } else {
    next.ligand = state.ligand;
    next.receptor = state.receptor;
  }
  next.complex = gt_layer_forward(
      bp, state.complex, graphs.complex.graph, block_prefix(block, "complex"),
      training, dropout_rng,
      trace != nullptr ? &trace->complex_heads : nullptr);
  next.complex = intermolecular_attention(
      bp, next.ligand, next.receptor, next.complex, graphs.complex, block,
      trace != nullptr ? &trace->inter_weights : nullptr);
  return next;
}

ad::Var readout(BoundParams &bp, const GraphState &state,
                const GraphSet &graphs, bool training,
                std::mt19937_64 *dropout_rng) {
  const ModelConfig &cfg = bp.params().model_config();
  auto pool = [&](const ad::Var &h) {
    return cfg.aggregate == Aggregate::kSum ? sum_rows(h) : mean_rows(h);
  };
  ad::Var p_lig, p_rec;
  if (cfg.one_way) {
    const std::size_t n = graphs.complex.graph.n_nodes;
    const std::size_t n_lig = graphs.complex.n_ligand();
    p_lig = pool(slice_rows(state.complex, 0, n_lig));
    p_rec = pool(slice_rows(state.complex, n_lig, n));
  } else {
    p_lig = pool(state.ligand);
    p_rec = pool(state.receptor);
  }
  ad::Var cat = ad::concat_cols({p_lig, p_rec, pool(state.complex)});
  ad::Var hidden = relu(add(matmul(cat, bp.get("readout.fc1.weight")),
                            bp.get("readout.fc1.bias")));
  hidden = maybe_dropout(hidden, cfg, training, dropout_rng);
  return add(matmul(hidden, bp.get("readout.fc2.weight")),
             bp.get("readout.fc2.bias"));
}

ForwardResult model_forward(BoundParams &bp, const GraphSet &graphs,
                            bool training, std::mt19937_64 *dropout_rng,
                            AttentionTrace *trace) {
  const ModelConfig &cfg = bp.params().model_config();
  ad::Tape &tape = bp.tape();
  ad::Var w_node = bp.get("embed.node");
  ad::Var w_pe = bp.get("embed.pe");

  GraphState state;
  if (!cfg.one_way) {
    state.ligand = embed(tape, graphs.ligand, w_node, w_pe);
    state.receptor = embed(tape, graphs.receptor, w_node, w_pe);
  }
  state.complex = embed(tape, graphs.complex.graph, w_node, w_pe);

  for (int b = 0; b < cfg.n_blocks; ++b) {
    BlockTrace *bt = nullptr;
    if (trace != nullptr) {
      trace->blocks.emplace_back();
      bt = &trace->blocks.back();
    }
    state = igt_block(bp, state, graphs, b, training, dropout_rng, bt);
  }

  ForwardResult result;
  result.complex_h = state.complex;
  result.logit = readout(bp, state, graphs, training, dropout_rng);
  return result;
}

double predict_probability(const GraphSet &graphs, const IgtParams &params,
                           AttentionTrace *trace, ad::Tensor *complex_h) {
  ad::Tape tape;
  BoundParams bp(tape, params, /*requires_grad=*/false);
  ForwardResult r = model_forward(bp, graphs, /*training=*/false, nullptr,
                                  trace);
  if (complex_h != nullptr)
    *complex_h = r.complex_h.value();
  return sigmoid_scalar(r.logit.value().scalar_value());
}

double predict(const Molecule &receptor, const Molecule &ligand,
               const IgtParams &params) {
  const GraphSet graphs =
      featurize_complex(receptor, ligand, params.feature_config());
  return predict_probability(graphs, params);
}

} // namespace igt
