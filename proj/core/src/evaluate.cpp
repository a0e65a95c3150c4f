//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/evaluate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "igt/error.hpp"
#include "igt/metrics.hpp"
#include "parallel_for.hpp"

namespace igt {

void MetricOptions::validate() const {
  if (logauc_lambda <= 0 || logauc_lambda >= 1)
    throw ConfigError("metrics.logauc_lambda must lie in (0, 1)");
  if (roc_fpr <= 0 || roc_fpr > 1)
    throw ConfigError("metrics.roc_fpr must lie in (0, 1]");
  if (ef_fraction <= 0 || ef_fraction > 1)
    throw ConfigError("metrics.ef_fraction must lie in (0, 1]");
}

bool MetricValues::complete() const {
  return auroc && auprc && logauc && roc_enrichment && enrichment_factor &&
         balanced_accuracy;
}

namespace {

MetricValues compute_metrics(const ScoredSet &s, const MetricOptions &opt) {
  MetricValues v;
  auto guard = [&](std::optional<double> &slot, auto &&fn) {
    try {
      slot = fn();
    } catch (const UndefinedMetricError &e) {
      slot.reset();
      if (v.note.empty())
        v.note = e.what();
    }
  };
  guard(v.auroc, [&] { return auroc(s); });
  guard(v.auprc, [&] { return auprc(s); });
  guard(v.logauc, [&] { return adjusted_logauc(s, opt.logauc_lambda); });
  guard(v.roc_enrichment, [&] { return roc_enrichment(s, opt.roc_fpr); });
  guard(v.enrichment_factor,
        [&] { return enrichment_factor(s, opt.ef_fraction); });
  guard(v.balanced_accuracy,
        [&] { return balanced_accuracy(s, opt.threshold); });
  return v;
}

void macro_accumulate(std::optional<double> MetricValues::*field,
                      const std::vector<TargetReport> &targets,
                      MetricValues &macro) {
  double sum = 0;
  std::size_t n = 0;
  for (const TargetReport &t : targets) {
    const std::optional<double> &v = t.metrics.*field;
    if (v.has_value()) {
      sum += *v;
      ++n;
    }
  }
  if (n > 0)
    macro.*field = sum / static_cast<double>(n);
}

std::string cell(const std::optional<double> &v) {
  if (!v.has_value())
    return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

nlohmann::ordered_json metrics_json(const MetricValues &v) {
  nlohmann::ordered_json j;
  auto put = [&](const char *key, const std::optional<double> &value) {
    if (value.has_value())
      j[key] = *value;
    else
      j[key] = nullptr;
  };
  put("auroc", v.auroc);
  put("auprc", v.auprc);
  put("logauc", v.logauc);
  put("roc_enrichment", v.roc_enrichment);
  put("enrichment_factor", v.enrichment_factor);
  put("balanced_accuracy", v.balanced_accuracy);
  if (!v.note.empty())
    j["note"] = v.note;
  return j;
}

} // namespace

EvalReport evaluate(const std::vector<PreparedExample> &examples,
                    const IgtParams &params, const MetricOptions &options,
                    int workers) {
  options.validate();
  for (const PreparedExample &e : examples)
    if (!e.record.label.has_value())
      throw Error("evaluation requires a label on record " + e.record.id);

  EvalReport report;
  report.options = options;
  report.predictions.resize(examples.size());
  detail::parallel_for(examples.size(), workers, [&](std::size_t i) {
    const PreparedExample &e = examples[i];
    report.predictions[i] = {e.record.id, e.record.target_id,
                             predict_probability(e.graphs, params),
                             *e.record.label};
  });

  std::vector<std::string> target_order;
  std::map<std::string, ScoredSet> by_target;
  ScoredSet pooled;
  for (const Prediction &p : report.predictions) {
    if (by_target.find(p.target_id) == by_target.end())
      target_order.push_back(p.target_id);
    ScoredSet &s = by_target[p.target_id];
    s.scores.push_back(p.probability);
    s.labels.push_back(p.label);
    pooled.scores.push_back(p.probability);
    pooled.labels.push_back(p.label);
  }

  for (const std::string &target : target_order) {
    const ScoredSet &s = by_target[target];
    TargetReport t;
    t.target_id = target;
    t.n_examples = s.size();
    t.n_positives = static_cast<std::size_t>(
        std::count(s.labels.begin(), s.labels.end(), 1));
    t.metrics = compute_metrics(s, options);
    report.per_target.push_back(std::move(t));
  }

  macro_accumulate(&MetricValues::auroc, report.per_target, report.macro);
  macro_accumulate(&MetricValues::auprc, report.per_target, report.macro);
  macro_accumulate(&MetricValues::logauc, report.per_target, report.macro);
  macro_accumulate(&MetricValues::roc_enrichment, report.per_target,
                   report.macro);
  macro_accumulate(&MetricValues::enrichment_factor, report.per_target,
                   report.macro);
  macro_accumulate(&MetricValues::balanced_accuracy, report.per_target,
                   report.macro);
  if (!report.macro.complete())
    report.macro.note = "metric undefined for one or more targets";

  report.pooled.target_id = "pooled";
  report.pooled.n_examples = pooled.size();
  report.pooled.n_positives = static_cast<std::size_t>(
      std::count(pooled.labels.begin(), pooled.labels.end(), 1));
  report.pooled.metrics = compute_metrics(pooled, options);
  return report;
}

std::string format_eval_table(const EvalReport &report) {
  std::size_t width = 12;
  for (const TargetReport &t : report.per_target)
    width = std::max(width, t.target_id.size() + 2);
  auto row = [&](const std::string &name, const std::string &n,
                 const std::string &pos, const MetricValues &v) {
    std::string line = name;
    line.resize(width, ' ');
    auto col = [&](const std::string &s, std::size_t w) {
      std::string c = s;
      c.resize(std::max(w, c.size() + 1), ' ');
      line += c;
    };
    col(n, 7);
    col(pos, 7);
    col(cell(v.auroc), 10);
    col(cell(v.auprc), 10);
    col(cell(v.logauc), 10);
    col(cell(v.roc_enrichment), 10);
    col(cell(v.enrichment_factor), 10);
    col(cell(v.balanced_accuracy), 10);
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    return line + "\n";
  };

  std::string head = "target";
  head.resize(width, ' ');
  head += "n      pos    auroc     auprc     logauc    roc_enr   "
          "ef        bal_acc\n";
  std::string out = head;
  for (const TargetReport &t : report.per_target)
    out += row(t.target_id, std::to_string(t.n_examples),
               std::to_string(t.n_positives), t.metrics);
  out += row("macro", "-", "-", report.macro);
  out += row("pooled", std::to_string(report.pooled.n_examples),
             std::to_string(report.pooled.n_positives),
             report.pooled.metrics);
  return out;
}

std::vector<std::string> eval_report_lines(const EvalReport &report) {
  std::vector<std::string> lines;
  {
    nlohmann::ordered_json j;
    j["row"] = "options";
    j["logauc_lambda"] = report.options.logauc_lambda;
    j["roc_fpr"] = report.options.roc_fpr;
    j["ef_fraction"] = report.options.ef_fraction;
    j["threshold"] = report.options.threshold;
    lines.push_back(j.dump());
  }
  for (const TargetReport &t : report.per_target) {
    nlohmann::ordered_json j;
    j["row"] = "target";
    j["target_id"] = t.target_id;
    j["n"] = t.n_examples;
    j["positives"] = t.n_positives;
    j["metrics"] = metrics_json(t.metrics);
    lines.push_back(j.dump());
  }
  {
    nlohmann::ordered_json j;
    j["row"] = "macro";
    j["targets"] = report.per_target.size();
    j["metrics"] = metrics_json(report.macro);
    lines.push_back(j.dump());
  }
  {
    nlohmann::ordered_json j;
    j["row"] = "pooled";
    j["n"] = report.pooled.n_examples;
    j["positives"] = report.pooled.n_positives;
    j["metrics"] = metrics_json(report.pooled.metrics);
    lines.push_back(j.dump());
  }
  return lines;
}

std::vector<std::string> prediction_lines(const EvalReport &report) {
  std::vector<std::string> lines;
  lines.reserve(report.predictions.size());
  for (const Prediction &p : report.predictions) {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["target_id"] = p.target_id;
    j["probability"] = p.probability;
    j["label"] = p.label;
    lines.push_back(j.dump());
  }
  return lines;
}

} // namespace igt
