//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/tape.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "igt/error.hpp"

namespace igt::ad {

namespace {

constexpr double kLayerNormEps = 1e-12;

double sigmoid_scalar(double z) {
  if (z >= 0)
    return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

// log(1 + exp(t)) without overflow.
double softplus(double t) {
  return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t)));
}

Tape *tape_of(const Var &a, const char *op) {
  if (!a.valid())
    throw Error(std::string(op) + ": operand is not bound to a tape");
  return a.tape();
}

Tape *same_tape(const Var &a, const Var &b, const char *op) {
  Tape *t = tape_of(a, op);
  if (t != tape_of(b, op))
    throw Error(std::string(op) + ": operands live on different tapes");
  return t;
}

void matmul_into(const Tensor &a, const Tensor &b, Tensor &out,
                 bool transpose_a, bool transpose_b) {
  const std::size_t n = transpose_a ? a.cols() : a.rows();
  const std::size_t k = transpose_a ? a.rows() : a.cols();
  const std::size_t m = transpose_b ? b.rows() : b.cols();
  out = Tensor(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double av = transpose_a ? a.at(p, i) : a.at(i, p);
      if (av == 0.0)
        continue;
      for (std::size_t j = 0; j < m; ++j)
        out.at(i, j) += av * (transpose_b ? b.at(j, p) : b.at(p, j));
    }
  }
}

} // namespace

const Tensor &Var::value() const { return tape_->value_of(id_); }

Var Tape::input(Tensor value, bool requires_grad) {
  Node node;
  node.value = std::move(value);
  node.requires_grad = requires_grad;
  nodes_.push_back(std::move(node));
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

Var Tape::emit(const char *op, Tensor value, std::vector<int> parents,
               BackwardFn backward) {
  if (!value.all_finite())
    throw NumericError(std::string(op) + " produced a non-finite value");
  Node node;
  node.value = std::move(value);
  node.parents = std::move(parents);
  for (int p : node.parents)
    node.requires_grad = node.requires_grad || nodes_[p].requires_grad;
  if (node.requires_grad)
    node.backward = std::move(backward);
  nodes_.push_back(std::move(node));
  return Var(this, static_cast<int>(nodes_.size()) - 1);
}

void Tape::accumulate_grad(int id, const Tensor &g) {
  Node &node = nodes_[id];
  if (!node.requires_grad)
    return;
  if (!node.grad_ready) {
    node.grad = Tensor(node.value.rows(), node.value.cols());
    node.grad_ready = true;
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    node.grad.data()[i] += g.data()[i];
}

void Tape::backward(const Var &loss) {
  if (backward_done_)
    throw StaleTapeError("backward() called twice on the same tape");
  if (!loss.valid() || loss.tape() != this)
    throw Error("backward: loss is not on this tape");
  const Tensor &lv = nodes_[loss.id()].value;
  if (lv.rows() != 1 || lv.cols() != 1)
    throw ShapeError("backward: loss must be scalar [1x1], got " +
                     lv.shape_str());
  backward_done_ = true;
  accumulate_grad(loss.id(), Tensor::scalar(1.0));
  for (int id = loss.id(); id >= 0; --id) {
    Node &node = nodes_[id];
    if (!node.requires_grad || !node.grad_ready || !node.backward)
      continue;
    node.backward(*this, node.grad);
  }
}

bool Tape::has_grad(const Var &v) const {
  return v.valid() && nodes_[v.id()].grad_ready;
}

const Tensor &Tape::grad(const Var &v) const {
  if (!has_grad(v))
    throw Error("no gradient recorded for this variable");
  return nodes_[v.id()].grad;
}

void Tape::reset() {
  nodes_.clear();
  backward_done_ = false;
}

// ---- ops ----------------------------------------------------------------

Var matmul(const Var &a, const Var &b) {
  Tape *t = same_tape(a, b, "matmul");
  const Tensor &av = a.value();
  const Tensor &bv = b.value();
  if (av.cols() != bv.rows())
    throw ShapeError("matmul: " + av.shape_str() + " x " + bv.shape_str());
  Tensor out;
  matmul_into(av, bv, out, false, false);
  const int pa = a.id(), pb = b.id();
  return t->emit("matmul", std::move(out), {pa, pb},
                 [pa, pb](Tape &tp, const Tensor &g) {
                   Tensor da, db;
                   if (tp.node_requires_grad(pa)) {
                     matmul_into(g, tp.value_of(pb), da, false, true);
                     tp.accumulate_grad(pa, da);
                   }
                   if (tp.node_requires_grad(pb)) {
                     matmul_into(tp.value_of(pa), g, db, true, false);
                     tp.accumulate_grad(pb, db);
                   }
                 });
}

Var add(const Var &a, const Var &b) {
  Tape *t = same_tape(a, b, "add");
  const Tensor &av = a.value();
  const Tensor &bv = b.value();
  if (!av.same_shape(bv))
    throw ShapeError("add: " + av.shape_str() + " vs " + bv.shape_str());
  Tensor out = av;
  for (std::size_t i = 0; i < out.size(); ++i)
    out.data()[i] += bv.data()[i];
  const int pa = a.id(), pb = b.id();
  return t->emit("add", std::move(out), {pa, pb},
                 [pa, pb](Tape &tp, const Tensor &g) {
                   tp.accumulate_grad(pa, g);
                   tp.accumulate_grad(pb, g);
                 });
}

Var mul(const Var &a, const Var &b) {
  Tape *t = same_tape(a, b, "mul");
  const Tensor &av = a.value();
  const Tensor &bv = b.value();
  if (!av.same_shape(bv))
    throw ShapeError("mul: " + av.shape_str() + " vs " + bv.shape_str());
  Tensor out = av;
  for (std::size_t i = 0; i < out.size(); ++i)
    out.data()[i] *= bv.data()[i];
  const int pa = a.id(), pb = b.id();
  return t->emit("mul", std::move(out), {pa, pb},
                 [pa, pb](Tape &tp, const Tensor &g) {
                   if (tp.node_requires_grad(pa)) {
                     Tensor da = g;
                     for (std::size_t i = 0; i < da.size(); ++i)
                       da.data()[i] *= tp.value_of(pb).data()[i];
                     tp.accumulate_grad(pa, da);
                   }
                   if (tp.node_requires_grad(pb)) {
                     Tensor db = g;
                     for (std::size_t i = 0; i < db.size(); ++i)
                       db.data()[i] *= tp.value_of(pa).data()[i];
                     tp.accumulate_grad(pb, db);
                   }
                 });
}

Var scale(const Var &a, double factor) {
  Tape *t = tape_of(a, "scale");
  Tensor out = a.value();
  for (double &v : out.data())
    v *= factor;
  const int pa = a.id();
  return t->emit("scale", std::move(out), {pa},
                 [pa, factor](Tape &tp, const Tensor &g) {
                   Tensor da = g;
                   for (double &v : da.data())
                     v *= factor;
                   tp.accumulate_grad(pa, da);
                 });
}

Var transpose(const Var &a) {
  Tape *t = tape_of(a, "transpose");
  const Tensor &av = a.value();
  Tensor out(av.cols(), av.rows());
  for (std::size_t i = 0; i < av.rows(); ++i)
    for (std::size_t j = 0; j < av.cols(); ++j)
      out.at(j, i) = av.at(i, j);
  const int pa = a.id();
  return t->emit("transpose", std::move(out), {pa},
                 [pa](Tape &tp, const Tensor &g) {
                   Tensor da(g.cols(), g.rows());
                   for (std::size_t i = 0; i < g.rows(); ++i)
                     for (std::size_t j = 0; j < g.cols(); ++j)
                       da.at(j, i) = g.at(i, j);
                   tp.accumulate_grad(pa, da);
                 });
}

Var relu(const Var &a) {
  Tape *t = tape_of(a, "relu");
  Tensor out = a.value();
  for (double &v : out.data())
    v = v > 0 ? v : 0.0;
  const int pa = a.id();
  return t->emit("relu", std::move(out), {pa},
                 [pa](Tape &tp, const Tensor &g) {
                   Tensor da = g;
                   const Tensor &x = tp.value_of(pa);
                   for (std::size_t i = 0; i < da.size(); ++i)
                     if (x.data()[i] <= 0)
                       da.data()[i] = 0;
                   tp.accumulate_grad(pa, da);
                 });
}

Var tanh(const Var &a) {
  Tape *t = tape_of(a, "tanh");
  Tensor out = a.value();
  for (double &v : out.data())
    v = std::tanh(v);
  const int pa = a.id();
  Tensor y = out;
  return t->emit("tanh", std::move(out), {pa},
                 [pa, y](Tape &tp, const Tensor &g) {
                   Tensor da = g;
                   for (std::size_t i = 0; i < da.size(); ++i)
                     da.data()[i] *= 1.0 - y.data()[i] * y.data()[i];
                   tp.accumulate_grad(pa, da);
                 });
}

Var sigmoid(const Var &a) {
  Tape *t = tape_of(a, "sigmoid");
  Tensor out = a.value();
  for (double &v : out.data())
    v = sigmoid_scalar(v);
  const int pa = a.id();
  Tensor y = out;
  return t->emit("sigmoid", std::move(out), {pa},
                 [pa, y](Tape &tp, const Tensor &g) {
                   Tensor da = g;
                   for (std::size_t i = 0; i < da.size(); ++i)
                     da.data()[i] *= y.data()[i] * (1.0 - y.data()[i]);
                   tp.accumulate_grad(pa, da);
                 });
}

Var row_softmax(const Var &a) {
  Tape *t = tape_of(a, "row_softmax");
  const Tensor &x = a.value();
  Tensor out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    double m = -1e308;
    for (std::size_t j = 0; j < x.cols(); ++j)
      m = std::max(m, x.at(i, j));
    double s = 0;
    for (std::size_t j = 0; j < x.cols(); ++j) {
      out.at(i, j) = std::exp(x.at(i, j) - m);
      s += out.at(i, j);
    }
    for (std::size_t j = 0; j < x.cols(); ++j)
      out.at(i, j) /= s;
  }
  const int pa = a.id();
  Tensor y = out;
  return t->emit("row_softmax", std::move(out), {pa},
                 [pa, y](Tape &tp, const Tensor &g) {
                   Tensor da(y.rows(), y.cols());
                   for (std::size_t i = 0; i < y.rows(); ++i) {
                     double dot = 0;
                     for (std::size_t j = 0; j < y.cols(); ++j)
                       dot += g.at(i, j) * y.at(i, j);
                     for (std::size_t j = 0; j < y.cols(); ++j)
                       da.at(i, j) = y.at(i, j) * (g.at(i, j) - dot);
                   }
                   tp.accumulate_grad(pa, da);
                 });
}

Var layer_norm(const Var &x, const Var &gain, const Var &bias) {
  Tape *t = same_tape(x, gain, "layer_norm");
  same_tape(x, bias, "layer_norm");
  const Tensor &xv = x.value();
  const Tensor &gv = gain.value();
  const Tensor &bv = bias.value();
  if (gv.rows() != 1 || gv.cols() != xv.cols() || bv.rows() != 1 ||
      bv.cols() != xv.cols())
    throw ShapeError("layer_norm: x " + xv.shape_str() + ", gain " +
                     gv.shape_str() + ", bias " + bv.shape_str());
  const std::size_t n = xv.rows(), m = xv.cols();
  Tensor xhat(n, m);
  Tensor inv_col(n, 1);
  Tensor out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    double mu = 0;
    for (std::size_t j = 0; j < m; ++j)
      mu += xv.at(i, j);
    mu /= static_cast<double>(m);
    double var = 0;
    for (std::size_t j = 0; j < m; ++j) {
      const double d = xv.at(i, j) - mu;
      var += d * d;
    }
    var /= static_cast<double>(m);
    const double inv = 1.0 / std::sqrt(var + kLayerNormEps);
    inv_col.at(i, 0) = inv;
    for (std::size_t j = 0; j < m; ++j) {
      xhat.at(i, j) = (xv.at(i, j) - mu) * inv;
      out.at(i, j) = xhat.at(i, j) * gv.at(0, j) + bv.at(0, j);
    }
  }
  const int px = x.id(), pg = gain.id(), pb = bias.id();
  return t->emit(
      "layer_norm", std::move(out), {px, pg, pb},
      [px, pg, pb, xhat, inv_col](Tape &tp, const Tensor &g) {
        const std::size_t n = xhat.rows(), m = xhat.cols();
        const Tensor &gv = tp.value_of(pg);
        if (tp.node_requires_grad(pg) || tp.node_requires_grad(pb)) {
          Tensor dg(1, m), db(1, m);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) {
              dg.at(0, j) += g.at(i, j) * xhat.at(i, j);
              db.at(0, j) += g.at(i, j);
            }
          tp.accumulate_grad(pg, dg);
          tp.accumulate_grad(pb, db);
        }
        if (tp.node_requires_grad(px)) {
          Tensor dx(n, m);
          for (std::size_t i = 0; i < n; ++i) {
            double mean_dxh = 0, mean_dxh_xh = 0;
            for (std::size_t j = 0; j < m; ++j) {
              const double dxh = g.at(i, j) * gv.at(0, j);
              mean_dxh += dxh;
              mean_dxh_xh += dxh * xhat.at(i, j);
            }
            mean_dxh /= static_cast<double>(m);
            mean_dxh_xh /= static_cast<double>(m);
            for (std::size_t j = 0; j < m; ++j) {
              const double dxh = g.at(i, j) * gv.at(0, j);
              dx.at(i, j) = inv_col.at(i, 0) *
                            (dxh - mean_dxh - xhat.at(i, j) * mean_dxh_xh);
            }
          }
          tp.accumulate_grad(px, dx);
        }
      });
}

Var concat_rows(const std::vector<Var> &parts) {
  if (parts.empty())
    throw ShapeError("concat_rows: no operands");
  Tape *t = tape_of(parts[0], "concat_rows");
  const std::size_t m = parts[0].value().cols();
  std::size_t n = 0;
  std::vector<int> ids;
  for (const Var &p : parts) {
    same_tape(parts[0], p, "concat_rows");
    if (p.value().cols() != m)
      throw ShapeError("concat_rows: " + parts[0].value().shape_str() +
                       " vs " + p.value().shape_str());
    n += p.value().rows();
    ids.push_back(p.id());
  }
  Tensor out(n, m);
  std::size_t r = 0;
  for (const Var &p : parts) {
    const Tensor &pv = p.value();
    std::copy(pv.data().begin(), pv.data().end(),
              out.data().begin() + static_cast<long>(r * m));
    r += pv.rows();
  }
  return t->emit("concat_rows", std::move(out), ids,
                 [ids](Tape &tp, const Tensor &g) {
                   std::size_t r = 0;
                   for (int id : ids) {
                     const Tensor &pv = tp.value_of(id);
                     Tensor dp(pv.rows(), pv.cols());
                     for (std::size_t i = 0; i < pv.rows(); ++i)
                       for (std::size_t j = 0; j < pv.cols(); ++j)
                         dp.at(i, j) = g.at(r + i, j);
                     tp.accumulate_grad(id, dp);
                     r += pv.rows();
                   }
                 });
}

Var concat_cols(const std::vector<Var> &parts) {
  if (parts.empty())
    throw ShapeError("concat_cols: no operands");
  Tape *t = tape_of(parts[0], "concat_cols");
  const std::size_t n = parts[0].value().rows();
  std::size_t m = 0;
  std::vector<int> ids;
  for (const Var &p : parts) {
    same_tape(parts[0], p, "concat_cols");
    if (p.value().rows() != n)
      throw ShapeError("concat_cols: " + parts[0].value().shape_str() +
                       " vs " + p.value().shape_str());
    m += p.value().cols();
    ids.push_back(p.id());
  }
  Tensor out(n, m);
  std::size_t c = 0;
  for (const Var &p : parts) {
    const Tensor &pv = p.value();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < pv.cols(); ++j)
        out.at(i, c + j) = pv.at(i, j);
    c += pv.cols();
  }
  return t->emit("concat_cols", std::move(out), ids,
                 [ids](Tape &tp, const Tensor &g) {
                   std::size_t c = 0;
                   for (int id : ids) {
                     const Tensor &pv = tp.value_of(id);
                     Tensor dp(pv.rows(), pv.cols());
                     for (std::size_t i = 0; i < pv.rows(); ++i)
                       for (std::size_t j = 0; j < pv.cols(); ++j)
                         dp.at(i, j) = g.at(i, c + j);
                     tp.accumulate_grad(id, dp);
                     c += pv.cols();
                   }
                 });
}

Var slice_rows(const Var &a, std::size_t begin, std::size_t end) {
  Tape *t = tape_of(a, "slice_rows");
  const Tensor &av = a.value();
  if (begin >= end || end > av.rows())
    throw ShapeError("slice_rows: [" + std::to_string(begin) + "," +
                     std::to_string(end) + ") of " + av.shape_str());
  Tensor out(end - begin, av.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = av.at(begin + i, j);
  const int pa = a.id();
  return t->emit("slice_rows", std::move(out), {pa},
                 [pa, begin](Tape &tp, const Tensor &g) {
                   const Tensor &av = tp.value_of(pa);
                   Tensor da(av.rows(), av.cols());
                   for (std::size_t i = 0; i < g.rows(); ++i)
                     for (std::size_t j = 0; j < g.cols(); ++j)
                       da.at(begin + i, j) = g.at(i, j);
                   tp.accumulate_grad(pa, da);
                 });
}

Var slice_cols(const Var &a, std::size_t begin, std::size_t end) {
  Tape *t = tape_of(a, "slice_cols");
  const Tensor &av = a.value();
  if (begin >= end || end > av.cols())
    throw ShapeError("slice_cols: [" + std::to_string(begin) + "," +
                     std::to_string(end) + ") of " + av.shape_str());
  Tensor out(av.rows(), end - begin);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = av.at(i, begin + j);
  const int pa = a.id();
  return t->emit("slice_cols", std::move(out), {pa},
                 [pa, begin](Tape &tp, const Tensor &g) {
                   const Tensor &av = tp.value_of(pa);
                   Tensor da(av.rows(), av.cols());
                   for (std::size_t i = 0; i < g.rows(); ++i)
                     for (std::size_t j = 0; j < g.cols(); ++j)
                       da.at(i, begin + j) = g.at(i, j);
                   tp.accumulate_grad(pa, da);
                 });
}

Var sum_rows(const Var &a) {
  Tape *t = tape_of(a, "sum_rows");
  const Tensor &av = a.value();
  Tensor out(1, av.cols());
  for (std::size_t i = 0; i < av.rows(); ++i)
    for (std::size_t j = 0; j < av.cols(); ++j)
      out.at(0, j) += av.at(i, j);
  const int pa = a.id();
  return t->emit("sum_rows", std::move(out), {pa},
                 [pa](Tape &tp, const Tensor &g) {
                   const Tensor &av = tp.value_of(pa);
                   Tensor da(av.rows(), av.cols());
                   for (std::size_t i = 0; i < av.rows(); ++i)
                     for (std::size_t j = 0; j < av.cols(); ++j)
                       da.at(i, j) = g.at(0, j);
                   tp.accumulate_grad(pa, da);
                 });
}

Var mean_rows(const Var &a) {
  const double n = static_cast<double>(a.value().rows());
  return scale(sum_rows(a), 1.0 / n);
}

Var repeat_row(const Var &row, std::size_t n) {
  Tape *t = tape_of(row, "repeat_row");
  const Tensor &rv = row.value();
  if (rv.rows() != 1)
    throw ShapeError("repeat_row: expected [1xm], got " + rv.shape_str());
  Tensor out(n, rv.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < rv.cols(); ++j)
      out.at(i, j) = rv.at(0, j);
  const int pa = row.id();
  return t->emit("repeat_row", std::move(out), {pa},
                 [pa](Tape &tp, const Tensor &g) {
                   Tensor da(1, g.cols());
                   for (std::size_t i = 0; i < g.rows(); ++i)
                     for (std::size_t j = 0; j < g.cols(); ++j)
                       da.at(0, j) += g.at(i, j);
                   tp.accumulate_grad(pa, da);
                 });
}

Var scale_rows(const Var &a, const Var &col) {
  Tape *t = same_tape(a, col, "scale_rows");
  const Tensor &av = a.value();
  const Tensor &cv = col.value();
  if (cv.rows() != av.rows() || cv.cols() != 1)
    throw ShapeError("scale_rows: " + av.shape_str() + " vs " +
                     cv.shape_str());
  Tensor out = av;
  for (std::size_t i = 0; i < av.rows(); ++i)
    for (std::size_t j = 0; j < av.cols(); ++j)
      out.at(i, j) *= cv.at(i, 0);
  const int pa = a.id(), pc = col.id();
  return t->emit("scale_rows", std::move(out), {pa, pc},
                 [pa, pc](Tape &tp, const Tensor &g) {
                   const Tensor &av = tp.value_of(pa);
                   const Tensor &cv = tp.value_of(pc);
                   if (tp.node_requires_grad(pa)) {
                     Tensor da = g;
                     for (std::size_t i = 0; i < g.rows(); ++i)
                       for (std::size_t j = 0; j < g.cols(); ++j)
                         da.at(i, j) *= cv.at(i, 0);
                     tp.accumulate_grad(pa, da);
                   }
                   if (tp.node_requires_grad(pc)) {
                     Tensor dc(cv.rows(), 1);
                     for (std::size_t i = 0; i < g.rows(); ++i) {
                       double s = 0;
                       for (std::size_t j = 0; j < g.cols(); ++j)
                         s += g.at(i, j) * av.at(i, j);
                       dc.at(i, 0) = s;
                     }
                     tp.accumulate_grad(pc, dc);
                   }
                 });
}

Var scatter_edge_bias(const Var &vals,
                      const std::vector<std::pair<int, int>> &edges,
                      std::size_t n) {
  Tape *t = tape_of(vals, "scatter_edge_bias");
  const Tensor &vv = vals.value();
  if (vv.rows() != edges.size() || vv.cols() != 1)
    throw ShapeError("scatter_edge_bias: values " + vv.shape_str() + " vs " +
                     std::to_string(edges.size()) + " edges");
  std::set<std::pair<int, int>> seen;
  Tensor out(n, n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n ||
        static_cast<std::size_t>(j) >= n)
      throw ShapeError("scatter_edge_bias: edge index out of range");
    if (!seen.insert(edges[k]).second)
      throw Error("scatter_edge_bias: duplicate ordered edge");
    out.at(i, j) = vv.at(k, 0);
  }
  const int pv = vals.id();
  auto edge_copy = edges;
  return t->emit("scatter_edge_bias", std::move(out), {pv},
                 [pv, edge_copy](Tape &tp, const Tensor &g) {
                   Tensor dv(edge_copy.size(), 1);
                   for (std::size_t k = 0; k < edge_copy.size(); ++k)
                     dv.at(k, 0) = g.at(edge_copy[k].first, edge_copy[k].second);
                   tp.accumulate_grad(pv, dv);
                 });
}

Var dropout(const Var &a, double p, std::mt19937_64 &rng) {
  if (p <= 0.0)
    return a;
  if (p >= 1.0)
    throw Error("dropout: rate must be < 1");
  Tape *t = tape_of(a, "dropout");
  const Tensor &av = a.value();
  Tensor mask(av.rows(), av.cols());
  const double keep = 1.0 - p;
  for (double &m : mask.data()) {
    const double u =
        static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    m = (u < keep) ? 1.0 / keep : 0.0;
  }
  Tensor out = av;
  for (std::size_t i = 0; i < out.size(); ++i)
    out.data()[i] *= mask.data()[i];
  const int pa = a.id();
  return t->emit("dropout", std::move(out), {pa},
                 [pa, mask](Tape &tp, const Tensor &g) {
                   Tensor da = g;
                   for (std::size_t i = 0; i < da.size(); ++i)
                     da.data()[i] *= mask.data()[i];
                   tp.accumulate_grad(pa, da);
                 });
}

Var bce_with_logits(const Var &logits, const Tensor &targets,
                    double pos_weight) {
  Tape *t = tape_of(logits, "bce_with_logits");
  const Tensor &z = logits.value();
  if (!z.same_shape(targets))
    throw ShapeError("bce_with_logits: " + z.shape_str() + " vs " +
                     targets.shape_str());
  for (double y : targets.data())
    if (y != 0.0 && y != 1.0)
      throw Error("bce_with_logits: targets must be 0 or 1");
  const double n = static_cast<double>(z.size());
  double loss = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double zi = z.data()[i];
    const double yi = targets.data()[i];
    loss += pos_weight * yi * softplus(-zi) + (1.0 - yi) * softplus(zi);
  }
  loss /= n;
  const int pz = logits.id();
  return t->emit("bce_with_logits", Tensor::scalar(loss), {pz},
                 [pz, targets, pos_weight, n](Tape &tp, const Tensor &g) {
                   const Tensor &z = tp.value_of(pz);
                   Tensor dz(z.rows(), z.cols());
                   const double go = g.scalar_value();
                   for (std::size_t i = 0; i < z.size(); ++i) {
                     const double s = sigmoid_scalar(z.data()[i]);
                     const double yi = targets.data()[i];
                     dz.data()[i] = go *
                                    (s * (1.0 - yi) -
                                     pos_weight * yi * (1.0 - s)) /
                                    n;
                   }
                   tp.accumulate_grad(pz, dz);
                 });
}

} // namespace igt::ad
