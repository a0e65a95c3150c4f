//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_CHECKPOINT_HPP_
#define IGT_CHECKPOINT_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "igt/tensor.hpp"

namespace igt {

/// Ordered list of named tensors; order is preserved byte-for-byte on disk.
using NamedTensor = std::pair<std::string, ad::Tensor>;
using NamedTensors = std::vector<NamedTensor>;

/// First entry with the given name, or nullptr.
const ad::Tensor *find_tensor(const NamedTensors &entries,
                              const std::string &name);

// Binary container: magic "IGTC", u32 version = 1, u32 entry count; each
// entry is u16 name length, UTF-8 name, u8 rank, one u64 extent per rank
// dimension, then the row-major f64 payload. All integers and floats are
// little-endian. Rank on write: 0 for [1 x 1], 1 for [1 x n], 2 otherwise;
// readers restore those shapes.
void write_igtc(std::ostream &out, const NamedTensors &entries);
NamedTensors read_igtc(std::istream &in);

void write_igtc_file(const std::string &path, const NamedTensors &entries);
NamedTensors read_igtc_file(const std::string &path);

} // namespace igt

#endif // IGT_CHECKPOINT_HPP_
