//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/split.hpp"

#include <cmath>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "igt/error.hpp"

namespace igt {

void SplitSpec::validate() const {
  if (r_train < 0 || r_val < 0 || r_test < 0)
    throw ConfigError("split ratios must be non-negative");
  const double sum = r_train + r_val + r_test;
  if (std::abs(sum - 1.0) > 1e-9)
    throw ConfigError("split ratios must sum to 1, got " +
                      std::to_string(sum));
}

SplitResult split_records(const std::vector<ExampleRecord> &records,
                          const SplitSpec &spec) {
  spec.validate();

  std::vector<std::string> units;
  std::unordered_set<std::string> seen;
  for (const ExampleRecord &r : records)
    if (seen.insert(r.target_id).second)
      units.push_back(r.target_id);
  const std::size_t n_units = units.size();
  if (n_units < 3)
    throw SplitError("need at least 3 units to split, got " +
                     std::to_string(n_units));

  // Fisher-Yates with an explicit generator so the permutation is identical
  // on every platform.
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = n_units - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(units[i], units[j]);
  }

  const double u = static_cast<double>(n_units);
  const std::size_t n_train =
      static_cast<std::size_t>(std::floor(spec.r_train * u + 1e-9));
  const std::size_t n_val =
      static_cast<std::size_t>(std::floor(spec.r_val * u + 1e-9));

  std::unordered_map<std::string, int> partition_of;
  for (std::size_t k = 0; k < n_units; ++k) {
    const int part = k < n_train ? 0 : (k < n_train + n_val ? 1 : 2);
    partition_of.emplace(units[k], part);
  }

  SplitResult result;
  for (const ExampleRecord &r : records) {
    switch (partition_of.at(r.target_id)) {
    case 0:
      result.train.push_back(r);
      break;
    case 1:
      result.val.push_back(r);
      break;
    default:
      result.test.push_back(r);
      break;
    }
  }
  return result;
}

} // namespace igt
