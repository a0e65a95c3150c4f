//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_SPLIT_HPP_
#define IGT_SPLIT_HPP_

#include <cstdint>
#include <vector>

#include "igt/manifest.hpp"

namespace igt {

struct SplitSpec {
  double r_train = 0.70;
  double r_val = 0.15;
  double r_test = 0.15;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SplitResult {
  std::vector<ExampleRecord> train;
  std::vector<ExampleRecord> val;
  std::vector<ExampleRecord> test;
};

/// Partition records by their target_id so that every unit lands in exactly
/// one partition. Units are shuffled by a seeded generator, then counted off
/// as n_train = floor(r_train * U), n_val = floor(r_val * U), remainder
/// test. Records keep their input order inside each partition. Fewer than 3
/// units throws SplitError.
SplitResult split_records(const std::vector<ExampleRecord> &records,
                          const SplitSpec &spec);

} // namespace igt

#endif // IGT_SPLIT_HPP_
