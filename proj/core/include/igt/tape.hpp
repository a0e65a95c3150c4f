//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_TAPE_HPP_
#define IGT_TAPE_HPP_

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "igt/tensor.hpp"

namespace igt::ad {

class Tape;

/// Handle to one recorded value on a tape.
class Var {
public:
  Var() = default;

  const Tensor &value() const;
  Tape *tape() const { return tape_; }
  int id() const { return id_; }
  bool valid() const { return tape_ != nullptr; }

private:
  friend class Tape;
  Var(Tape *tape, int id) : tape_(tape), id_(id) {}

  Tape *tape_ = nullptr;
  int id_ = -1;
};

/// Define-by-run recording of forward operations with reverse-mode gradient
/// accumulation. Single-threaded; one tape per example.
class Tape {
public:
  Tape() = default;
  Tape(const Tape &) = delete;
  Tape &operator=(const Tape &) = delete;

  /// Register a leaf tensor. Gradients are tracked when `requires_grad`.
  Var input(Tensor value, bool requires_grad = false);
  Var constant(Tensor value) { return input(std::move(value), false); }

  /// Run reverse-mode accumulation from a scalar loss. Calling it a second
  /// time without reset() throws StaleTapeError.
  void backward(const Var &loss);

  bool has_grad(const Var &v) const;
  const Tensor &grad(const Var &v) const;

  /// Drop every recorded node and gradient; existing Vars become invalid.
  void reset();

  std::size_t num_nodes() const { return nodes_.size(); }

  // --- recording interface used by the op implementations ---
  using BackwardFn = std::function<void(Tape &, const Tensor &out_grad)>;
  Var emit(const char *op, Tensor value, std::vector<int> parents,
           BackwardFn backward);
  const Tensor &value_of(int id) const { return nodes_[id].value; }
  bool node_requires_grad(int id) const { return nodes_[id].requires_grad; }
  void accumulate_grad(int id, const Tensor &g);

private:
  struct Node {
    Tensor value;
    Tensor grad;
    bool requires_grad = false;
    bool grad_ready = false;
    std::vector<int> parents;
    BackwardFn backward;
  };

  std::vector<Node> nodes_;
  bool backward_done_ = false;
};

// ---- Forward operations -------------------------------------------------
// Every op validates shapes (ShapeError naming both shapes), checks the
// result for NaN/Inf (NumericError) and records itself when any operand
// requires a gradient.

Var matmul(const Var &a, const Var &b);
Var add(const Var &a, const Var &b);
Var mul(const Var &a, const Var &b);
Var scale(const Var &a, double factor);
Var transpose(const Var &a);
Var relu(const Var &a);
Var tanh(const Var &a);
Var sigmoid(const Var &a);
Var row_softmax(const Var &a);
Var layer_norm(const Var &x, const Var &gain, const Var &bias);
Var concat_rows(const std::vector<Var> &parts);
Var concat_cols(const std::vector<Var> &parts);
Var slice_rows(const Var &a, std::size_t begin, std::size_t end);
Var slice_cols(const Var &a, std::size_t begin, std::size_t end);
Var sum_rows(const Var &a);   // [n x m] -> [1 x m]
Var mean_rows(const Var &a);  // [n x m] -> [1 x m]
Var repeat_row(const Var &row, std::size_t n);
Var scale_rows(const Var &a, const Var &col); // col is [n x 1]

/// Dense [n x n] matrix with vals[k] at edge k's (i, j) and zero elsewhere.
/// Each ordered pair may appear at most once.
Var scatter_edge_bias(const Var &vals,
                      const std::vector<std::pair<int, int>> &edges,
                      std::size_t n);

/// Inverted dropout with a seeded Bernoulli mask; records the mask on the
/// tape so backward sees the same zeros.
Var dropout(const Var &a, double p, std::mt19937_64 &rng);

/// Mean binary cross-entropy over all elements, from logits. `targets` must
/// be 0/1 and shape-match. pos_weight scales the positive-class term.
Var bce_with_logits(const Var &logits, const Tensor &targets,
                    double pos_weight = 1.0);

} // namespace igt::ad

#endif // IGT_TAPE_HPP_
