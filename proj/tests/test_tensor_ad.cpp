//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "igt/adam.hpp"
#include "igt/error.hpp"
#include "igt/tape.hpp"
#include "igt/tensor.hpp"

namespace {

using igt::ad::concat_cols;
using igt::ad::concat_rows;
using igt::ad::Tape;
using igt::ad::Tensor;
using igt::ad::Var;

TEST(Tensor, BasicsAndShapes) {
  Tensor t = Tensor::from_rows({{1, 2, 3}, {4, 5, 6}});
  EXPECT_EQ(t.rows(), 2u);
  EXPECT_EQ(t.cols(), 3u);
  EXPECT_DOUBLE_EQ(t.at(1, 2), 6.0);
  EXPECT_EQ(t.shape_str(), "[2x3]");
  EXPECT_DOUBLE_EQ(Tensor::scalar(7.5).scalar_value(), 7.5);
  EXPECT_THROW((void)t.scalar_value(), igt::ShapeError);
  EXPECT_TRUE(t.all_finite());
  t.at(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_FALSE(t.all_finite());
}

TEST(TapeOps, MatmulHandComputed) {
  Tape tape;
  Var a = tape.constant(Tensor::from_rows({{1, 2, 3}, {4, 5, 6}}));
  Var b = tape.constant(Tensor::from_rows({{7, 8}, {9, 10}, {11, 12}}));
  Tensor c = matmul(a, b).value();
  // 1*7+2*9+3*11 = 58, 1*8+2*10+3*12 = 64, 4*7+5*9+6*11 = 139, ...
  EXPECT_DOUBLE_EQ(c.at(0, 0), 58.0);
  EXPECT_DOUBLE_EQ(c.at(0, 1), 64.0);
  EXPECT_DOUBLE_EQ(c.at(1, 0), 139.0);
  EXPECT_DOUBLE_EQ(c.at(1, 1), 154.0);
}

TEST(TapeOps, MatmulShapeMismatchNamesBothShapes) {
  Tape tape;
  Var a = tape.constant(Tensor(2, 3, 1.0));
  Var b = tape.constant(Tensor(2, 3, 1.0));
  try {
    (void)matmul(a, b);
    FAIL() << "expected ShapeError";
  } catch (const igt::ShapeError &e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("[2x3]"), std::string::npos) << msg;
  }
}

TEST(TapeOps, RowSoftmaxUniformOnEqualRow) {
  Tape tape;
  Var a = tape.constant(Tensor(1, 4, 3.7));
  Tensor s = row_softmax(a).value();
  for (std::size_t j = 0; j < 4; ++j)
    EXPECT_DOUBLE_EQ(s.at(0, j), 0.25);
}

TEST(TapeOps, RowSoftmaxRowsSumToOne) {
  Tape tape;
  Var a = tape.constant(Tensor::from_rows({{-3, 0, 2.5}, {100, 101, 99}}));
  Tensor s = row_softmax(a).value();
  for (std::size_t i = 0; i < 2; ++i) {
    double sum = 0;
    for (std::size_t j = 0; j < 3; ++j) sum += s.at(i, j);
    EXPECT_NEAR(sum, 1.0, 1e-15);
  }
}

TEST(TapeOps, ElementwiseValues) {
  Tape tape;
  Var a = tape.constant(Tensor::from_rows({{-1.5, 0, 2}}));
  Tensor r = relu(a).value();
  EXPECT_DOUBLE_EQ(r.at(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(r.at(0, 2), 2.0);
  EXPECT_DOUBLE_EQ(sigmoid(tape.constant(Tensor::scalar(0))).value().scalar_value(), 0.5);
  EXPECT_DOUBLE_EQ(igt::ad::tanh(tape.constant(Tensor::scalar(0))).value().scalar_value(), 0.0);
  EXPECT_DOUBLE_EQ(scale(a, -2.0).value().at(0, 2), -4.0);
  Tensor tr = transpose(tape.constant(Tensor::from_rows({{1, 2}, {3, 4}}))).value();
  EXPECT_DOUBLE_EQ(tr.at(0, 1), 3.0);
}

TEST(TapeOps, LayerNormMoments) {
  Tape tape;
  Var x = tape.constant(Tensor::from_rows({{0.3, -1.2, 4.5, 2.2, 0.0},
                                           {10.0, 10.5, 9.1, 12.4, 8.8}}));
  Var gain = tape.constant(Tensor(1, 5, 1.0));
  Var bias = tape.constant(Tensor(1, 5, 0.0));
  Tensor y = layer_norm(x, gain, bias).value();
  for (std::size_t i = 0; i < 2; ++i) {
    double mean = 0, var = 0;
    for (std::size_t j = 0; j < 5; ++j) mean += y.at(i, j);
    mean /= 5;
    for (std::size_t j = 0; j < 5; ++j)
      var += (y.at(i, j) - mean) * (y.at(i, j) - mean);
    var /= 5;
    EXPECT_LT(std::abs(mean), 1e-12);
    EXPECT_NEAR(var, 1.0, 1e-9);
  }
}

TEST(TapeOps, LayerNormAppliesGainAndBias) {
  Tape tape;
  Var x = tape.constant(Tensor::from_rows({{1.0, 2.0, 3.0}}));
  Var gain = tape.constant(Tensor::row({2.0, 2.0, 2.0}));
  Var bias = tape.constant(Tensor::row({5.0, 5.0, 5.0}));
  Var g1 = tape.constant(Tensor(1, 3, 1.0));
  Var b0 = tape.constant(Tensor(1, 3, 0.0));
  Tensor plain = layer_norm(x, g1, b0).value();
  Tensor scaled = layer_norm(x, gain, bias).value();
  for (std::size_t j = 0; j < 3; ++j)
    EXPECT_NEAR(scaled.at(0, j), 2.0 * plain.at(0, j) + 5.0, 1e-12);
}

TEST(TapeOps, ConcatSliceAndReductions) {
  Tape tape;
  Var a = tape.constant(Tensor::from_rows({{1, 2}, {3, 4}}));
  Var b = tape.constant(Tensor::from_rows({{5, 6}}));
  Tensor rows = concat_rows({a, b}).value();
  EXPECT_EQ(rows.rows(), 3u);
  EXPECT_DOUBLE_EQ(rows.at(2, 1), 6.0);
  Tensor cols = concat_cols({a, a}).value();
  EXPECT_EQ(cols.cols(), 4u);
  EXPECT_DOUBLE_EQ(cols.at(1, 3), 4.0);
  EXPECT_DOUBLE_EQ(slice_rows(a, 1, 2).value().at(0, 0), 3.0);
  EXPECT_DOUBLE_EQ(slice_cols(a, 1, 2).value().at(1, 0), 4.0);
  Tensor sum = sum_rows(a).value();
  EXPECT_DOUBLE_EQ(sum.at(0, 0), 4.0);
  EXPECT_DOUBLE_EQ(sum.at(0, 1), 6.0);
  Tensor mean = mean_rows(a).value();
  EXPECT_DOUBLE_EQ(mean.at(0, 0), 2.0);
  Tensor rep = repeat_row(b, 3).value();
  EXPECT_EQ(rep.rows(), 3u);
  EXPECT_DOUBLE_EQ(rep.at(2, 0), 5.0);
  Var col = tape.constant(Tensor::from_rows({{2}, {10}}));
  Tensor sr = scale_rows(a, col).value();
  EXPECT_DOUBLE_EQ(sr.at(0, 1), 4.0);
  EXPECT_DOUBLE_EQ(sr.at(1, 0), 30.0);
}

TEST(TapeOps, ScatterEdgeBiasPlacesValues) {
  Tape tape;
  Var vals = tape.constant(Tensor::from_rows({{1.5}, {-2.5}}));
  Tensor dense =
      scatter_edge_bias(vals, {{0, 2}, {1, 0}}, 3).value();
  EXPECT_DOUBLE_EQ(dense.at(0, 2), 1.5);
  EXPECT_DOUBLE_EQ(dense.at(1, 0), -2.5);
  EXPECT_DOUBLE_EQ(dense.at(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(dense.at(2, 1), 0.0);
  EXPECT_THROW((void)scatter_edge_bias(vals, {{0, 1}, {0, 1}}, 3), igt::Error);
  EXPECT_THROW((void)scatter_edge_bias(vals, {{0, 1}, {0, 3}}, 3),
               igt::ShapeError);
}

TEST(TapeOps, BceWithLogitsValues) {
  Tape tape;
  Var zero = tape.constant(Tensor::scalar(0.0));
  EXPECT_NEAR(bce_with_logits(zero, Tensor::scalar(1.0)).value().scalar_value(),
              std::log(2.0), 1e-15);
  // softplus(-z) for target 1, softplus(z) for target 0.
  Var z = tape.constant(Tensor::scalar(0.3));
  EXPECT_NEAR(bce_with_logits(z, Tensor::scalar(1.0)).value().scalar_value(),
              std::log1p(std::exp(-0.3)), 1e-15);
  EXPECT_NEAR(bce_with_logits(z, Tensor::scalar(0.0)).value().scalar_value(),
              std::log1p(std::exp(0.3)), 1e-15);
  // pos_weight scales only the positive term; mean over elements.
  Var two = tape.constant(Tensor::from_rows({{0.3, 0.3}}));
  Tensor targets = Tensor::row({1.0, 0.0});
  const double pos = std::log1p(std::exp(-0.3));
  const double neg = std::log1p(std::exp(0.3));
  EXPECT_NEAR(bce_with_logits(two, targets).value().scalar_value(),
              0.5 * (pos + neg), 1e-15);
  EXPECT_NEAR(bce_with_logits(two, targets, 3.0).value().scalar_value(),
              0.5 * (3.0 * pos + neg), 1e-15);
}

TEST(TapeOps, ExtremeLogitsStayFinite) {
  Tape tape;
  Var z = tape.constant(Tensor::row({80.0, -80.0}));
  const double loss =
      bce_with_logits(z, Tensor::row({0.0, 1.0})).value().scalar_value();
  EXPECT_TRUE(std::isfinite(loss));
  EXPECT_NEAR(loss, 80.0, 1e-9);
}

TEST(TapeOps, NumericFaultOnNonFiniteResult) {
  Tape tape;
  Var big = tape.constant(Tensor::scalar(1e308));
  EXPECT_THROW((void)scale(big, 1e10), igt::NumericError);
}

TEST(Backward, SumGivesOnes) {
  Tape tape;
  Var w = tape.input(Tensor(1, 5, 2.0), true);
  Var total = matmul(w, tape.constant(Tensor(5, 1, 1.0)));
  tape.backward(total);
  const Tensor &g = tape.grad(w);
  for (std::size_t j = 0; j < 5; ++j) EXPECT_DOUBLE_EQ(g.at(0, j), 1.0);
}

TEST(Backward, FanOutAccumulates) {
  Tape tape;
  Var x = tape.input(Tensor::scalar(1.25), true);
  Var y = add(x, x);
  tape.backward(y);
  EXPECT_DOUBLE_EQ(tape.grad(x).scalar_value(), 2.0);
}

TEST(Backward, SecondBackwardThrowsStaleTape) {
  Tape tape;
  Var x = tape.input(Tensor::scalar(1.0), true);
  Var y = scale(x, 2.0);
  tape.backward(y);
  EXPECT_THROW(tape.backward(y), igt::StaleTapeError);
  tape.reset();
  Var x2 = tape.input(Tensor::scalar(1.0), true);
  Var y2 = scale(x2, 3.0);
  tape.backward(y2);
  EXPECT_DOUBLE_EQ(tape.grad(x2).scalar_value(), 3.0);
}

// Central finite differences over a composite graph touching most ops.
double composite_loss(const Tensor &w, const Tensor &gain, const Tensor &bias,
                      Tensor *grad_w = nullptr, Tensor *grad_gain = nullptr,
                      Tensor *grad_bias = nullptr) {
  Tape tape;
  Var x = tape.constant(Tensor::from_rows({{0.4, -1.1, 0.9}, {1.3, 0.2, -0.7}}));
  Var vw = tape.input(w, grad_w != nullptr);
  Var vg = tape.input(gain, grad_gain != nullptr);
  Var vb = tape.input(bias, grad_bias != nullptr);
  Var m = matmul(x, vw);                       // [2 x 2]
  Var t = igt::ad::tanh(m);
  Var c = concat_cols({t, sigmoid(m)});        // [2 x 4]
  Var sm = row_softmax(scale(c, 1.7));
  Var ln = layer_norm(add(sm, relu(c)), vg, vb);
  Tensor targets = Tensor::from_rows({{1, 0, 0, 1}, {0, 1, 1, 0}});
  Var loss = bce_with_logits(ln, targets, 1.3);
  const double out = loss.value().scalar_value();
  if (grad_w) {
    tape.backward(loss);
    *grad_w = tape.grad(vw);
    *grad_gain = tape.grad(vg);
    *grad_bias = tape.grad(vb);
  }
  return out;
}

TEST(Backward, CompositeMatchesFiniteDifferences) {
  Tensor w = Tensor::from_rows({{0.2, -0.5}, {0.8, 0.1}, {-0.3, 0.6}});
  Tensor gain(1, 4, 1.1);
  Tensor bias(1, 4, -0.2);
  Tensor gw, gg, gb;
  composite_loss(w, gain, bias, &gw, &gg, &gb);

  const double h = 1e-5;
  auto check = [&](Tensor &param, const Tensor &analytic) {
    for (std::size_t i = 0; i < param.size(); ++i) {
      const double saved = param.data()[i];
      param.data()[i] = saved + h;
      const double up = composite_loss(w, gain, bias);
      param.data()[i] = saved - h;
      const double dn = composite_loss(w, gain, bias);
      param.data()[i] = saved;
      const double numeric = (up - dn) / (2 * h);
      const double a = analytic.data()[i];
      const double denom = std::max({std::abs(a), std::abs(numeric), 1e-3});
      EXPECT_LT(std::abs(a - numeric) / denom, 1e-6)
          << "entry " << i << " analytic " << a << " numeric " << numeric;
    }
  };
  check(w, gw);
  check(gain, gg);
  check(bias, gb);
}

TEST(Dropout, MaskSemantics) {
  Tape tape;
  Tensor x(4, 8, 1.0);
  Var a = tape.input(x, true);
  std::mt19937_64 rng(7);
  Var d = dropout(a, 0.5, rng);
  const Tensor &val = d.value();
  std::size_t kept = 0;
  for (double v : val.data()) {
    EXPECT_TRUE(v == 0.0 || v == 2.0) << v;
    kept += v != 0.0;
  }
  EXPECT_GT(kept, 0u);
  EXPECT_LT(kept, val.size());
  // Backward passes gradient only through kept entries, scaled the same way.
  tape.backward(bce_with_logits(d, Tensor(4, 8, 1.0)));
  const Tensor &g = tape.grad(a);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (val.data()[i] == 0.0) EXPECT_DOUBLE_EQ(g.data()[i], 0.0);
  }
}

TEST(Dropout, SeededAndDisabled) {
  Tape t1, t2;
  Tensor x(3, 5, 0.7);
  std::mt19937_64 r1(11), r2(11);
  Tensor a = dropout(t1.input(x, false), 0.3, r1).value();
  Tensor b = dropout(t2.input(x, false), 0.3, r2).value();
  EXPECT_EQ(a, b);
  Tape t3;
  std::mt19937_64 r3(11);
  Var in = t3.input(x, false);
  Var out = dropout(in, 0.0, r3);
  EXPECT_EQ(out.value(), x);
}

TEST(Adam, ZeroGradLeavesParams) {
  igt::Adam opt({.lr = 0.1});
  igt::NamedTensors params{{"w", Tensor::row({1.0, -2.0})}};
  igt::NamedTensors grads{{"w", Tensor(1, 2, 0.0)}};
  opt.step(params, grads);
  EXPECT_EQ(opt.step_count(), 1u);
  EXPECT_DOUBLE_EQ(params[0].second.at(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(params[0].second.at(0, 1), -2.0);
}

TEST(Adam, FirstStepMagnitudeIsLr) {
  igt::Adam opt({.lr = 0.05});
  igt::NamedTensors params{{"w", Tensor::row({1.0, 1.0, 1.0})}};
  igt::NamedTensors grads{{"w", Tensor::row({3.0, -0.02, 400.0})}};
  opt.step(params, grads);
  for (std::size_t j = 0; j < 3; ++j) {
    const double delta = std::abs(params[0].second.at(0, j) - 1.0);
    EXPECT_NEAR(delta, 0.05, 0.05 * 1e-5);
  }
}

TEST(Adam, TenStepTrajectoryMatchesReference) {
  // f(w) = w^2 from w = 1 with lr 0.1; values from an independent
  // reference implementation of bias-corrected Adam.
  const std::vector<double> expected = {
      0.9000000005,        0.8004122286917928, 0.7015862729460303,
      0.603939060573746,   0.507963659264342,  0.4142364559936619,
      0.3234207049391021,  0.23626372452104188,
      0.1535845600703636,  0.07624915560691221};
  igt::Adam opt({.lr = 0.1});
  igt::NamedTensors params{{"w", Tensor::scalar(1.0)}};
  for (double want : expected) {
    const double w = params[0].second.scalar_value();
    igt::NamedTensors grads{{"w", Tensor::scalar(2.0 * w)}};
    opt.step(params, grads);
    EXPECT_NEAR(params[0].second.scalar_value(), want, 1e-12);
  }
}

TEST(Adam, StateRoundTripContinuesIdentically) {
  igt::Adam a({.lr = 0.01});
  igt::NamedTensors pa{{"w", Tensor::row({0.5, -0.5})}};
  auto grad_of = [](const igt::NamedTensors &p) {
    igt::NamedTensors g;
    g.emplace_back("w", Tensor::row({2 * p[0].second.at(0, 0) + 0.3,
                                     2 * p[0].second.at(0, 1) - 0.1}));
    return g;
  };
  for (int i = 0; i < 3; ++i) a.step(pa, grad_of(pa));
  igt::Adam b = igt::Adam::from_state(a.state());
  EXPECT_EQ(b.step_count(), 3u);
  igt::NamedTensors pb = pa;
  for (int i = 0; i < 2; ++i) {
    a.step(pa, grad_of(pa));
    b.step(pb, grad_of(pb));
  }
  EXPECT_EQ(pa[0].second, pb[0].second);
}

} // namespace
