//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/adam.hpp"

#include <cmath>

#include "igt/error.hpp"

namespace igt {

Adam::Moments &Adam::moments_for(const std::string &name,
                                 const ad::Tensor &shape_like) {
  auto it = moments_.find(name);
  if (it == moments_.end()) {
    Moments fresh{ad::Tensor(shape_like.rows(), shape_like.cols()),
                  ad::Tensor(shape_like.rows(), shape_like.cols())};
    it = moments_.emplace(name, std::move(fresh)).first;
    order_.push_back(name);
  }
  if (!it->second.m.same_shape(shape_like))
    throw ShapeError("adam: moment " + it->second.m.shape_str() +
                     " vs parameter " + shape_like.shape_str() + " for " +
                     name);
  return it->second;
}

void Adam::step(NamedTensors &params, const NamedTensors &grads) {
  if (params.size() != grads.size())
    throw ShapeError("adam: " + std::to_string(params.size()) +
                     " parameters vs " + std::to_string(grads.size()) +
                     " gradients");
  ++step_;
  const double bc1 = 1.0 - std::pow(config_.beta1, static_cast<double>(step_));
  const double bc2 = 1.0 - std::pow(config_.beta2, static_cast<double>(step_));
  for (std::size_t k = 0; k < params.size(); ++k) {
    auto &[name, p] = params[k];
    const auto &[gname, g] = grads[k];
    if (name != gname)
      throw Error("adam: parameter '" + name + "' paired with gradient '" +
                  gname + "'");
    if (!p.same_shape(g))
      throw ShapeError("adam: parameter " + p.shape_str() + " vs gradient " +
                       g.shape_str() + " for " + name);
    Moments &mo = moments_for(name, p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double gi = g.data()[i];
      double &m = mo.m.data()[i];
      double &v = mo.v.data()[i];
      m = config_.beta1 * m + (1.0 - config_.beta1) * gi;
      v = config_.beta2 * v + (1.0 - config_.beta2) * gi * gi;
      const double mhat = m / bc1;
      const double vhat = v / bc2;
      p.data()[i] -= config_.lr * mhat / (std::sqrt(vhat) + config_.eps);
    }
  }
}

NamedTensors Adam::state() const {
  NamedTensors out;
  out.emplace_back("adam.step",
                   ad::Tensor::scalar(static_cast<double>(step_)));
  out.emplace_back("adam.lr", ad::Tensor::scalar(config_.lr));
  out.emplace_back("adam.beta1", ad::Tensor::scalar(config_.beta1));
  out.emplace_back("adam.beta2", ad::Tensor::scalar(config_.beta2));
  out.emplace_back("adam.eps", ad::Tensor::scalar(config_.eps));
  for (const std::string &name : order_) {
    const Moments &mo = moments_.at(name);
    out.emplace_back(name + ".m", mo.m);
    out.emplace_back(name + ".v", mo.v);
  }
  return out;
}

Adam Adam::from_state(const NamedTensors &entries) {
  auto scalar = [&](const std::string &name) {
    const ad::Tensor *t = find_tensor(entries, name);
    if (t == nullptr)
      throw ParseError("adam state: missing entry " + name);
    return t->scalar_value();
  };
  AdamConfig config;
  config.lr = scalar("adam.lr");
  config.beta1 = scalar("adam.beta1");
  config.beta2 = scalar("adam.beta2");
  config.eps = scalar("adam.eps");
  Adam adam(config);
  adam.step_ = static_cast<std::uint64_t>(scalar("adam.step"));
  for (const auto &[name, tensor] : entries) {
    if (name.size() < 2 || name.compare(name.size() - 2, 2, ".m") != 0 ||
        name.rfind("adam.", 0) == 0)
      continue;
    const std::string base = name.substr(0, name.size() - 2);
    const ad::Tensor *v = find_tensor(entries, base + ".v");
    if (v == nullptr)
      throw ParseError("adam state: missing entry " + base + ".v");
    adam.moments_.emplace(base, Moments{tensor, *v});
    adam.order_.push_back(base);
  }
  return adam;
}

} // namespace igt
