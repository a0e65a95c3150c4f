//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>

#include "igt/error.hpp"

namespace igt {

namespace {

constexpr char kMagic[4] = {'I', 'G', 'T', 'C'};
constexpr std::uint32_t kVersion = 1;

template <typename T> void put_le(std::ostream &out, T value) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i)
    buf[i] = static_cast<unsigned char>((value >> (8 * i)) & 0xff);
  out.write(reinterpret_cast<const char *>(buf), sizeof(T));
}

template <typename T> T get_le(std::istream &in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char *>(buf), sizeof(T)))
    throw ParseError("checkpoint: truncated stream");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i)
    value |= static_cast<T>(buf[i]) << (8 * i);
  return value;
}

void put_f64(std::ostream &out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  put_le(out, bits);
}

double get_f64(std::istream &in) {
  const std::uint64_t bits = get_le<std::uint64_t>(in);
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

} // namespace

const ad::Tensor *find_tensor(const NamedTensors &entries,
                              const std::string &name) {
  for (const auto &[n, t] : entries)
    if (n == name)
      return &t;
  return nullptr;
}

void write_igtc(std::ostream &out, const NamedTensors &entries) {
  out.write(kMagic, 4);
  put_le(out, kVersion);
  put_le(out, static_cast<std::uint32_t>(entries.size()));
  for (const auto &[name, tensor] : entries) {
    if (name.size() > std::numeric_limits<std::uint16_t>::max())
      throw Error("checkpoint: entry name too long: " + name);
    if (tensor.size() == 0)
      throw Error("checkpoint: empty tensor for entry " + name);
    put_le(out, static_cast<std::uint16_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    std::uint8_t rank = 2;
    if (tensor.rows() == 1 && tensor.cols() == 1)
      rank = 0;
    else if (tensor.rows() == 1)
      rank = 1;
    out.put(static_cast<char>(rank));
    if (rank == 1) {
      put_le(out, static_cast<std::uint64_t>(tensor.cols()));
    } else if (rank == 2) {
      put_le(out, static_cast<std::uint64_t>(tensor.rows()));
      put_le(out, static_cast<std::uint64_t>(tensor.cols()));
    }
    for (double v : tensor.data())
      put_f64(out, v);
  }
  if (!out)
    throw Error("checkpoint: write failed");
}

NamedTensors read_igtc(std::istream &in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
    throw ParseError("checkpoint: bad magic, expected IGTC");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kVersion)
    throw ParseError("checkpoint: unsupported version " +
                     std::to_string(version));
  const auto count = get_le<std::uint32_t>(in);
  NamedTensors entries;
  entries.reserve(count);
  for (std::uint32_t e = 0; e < count; ++e) {
    const auto name_len = get_le<std::uint16_t>(in);
    std::string name(name_len, '\0');
    if (name_len > 0 &&
        !in.read(name.data(), static_cast<std::streamsize>(name_len)))
      throw ParseError("checkpoint: truncated entry name");
    const int rank = in.get();
    if (rank < 0)
      throw ParseError("checkpoint: truncated stream");
    if (rank > 2)
      throw ParseError("checkpoint: unsupported rank " + std::to_string(rank) +
                       " for entry " + name);
    std::uint64_t rows = 1, cols = 1;
    if (rank == 1) {
      cols = get_le<std::uint64_t>(in);
    } else if (rank == 2) {
      rows = get_le<std::uint64_t>(in);
      cols = get_le<std::uint64_t>(in);
    }
    if (rows == 0 || cols == 0 || rows * cols > (1ull << 32))
      throw ParseError("checkpoint: implausible extents for entry " + name);
    ad::Tensor tensor(static_cast<std::size_t>(rows),
                      static_cast<std::size_t>(cols));
    for (double &v : tensor.data())
      v = get_f64(in);
    entries.emplace_back(std::move(name), std::move(tensor));
  }
  return entries;
}

void write_igtc_file(const std::string &path, const NamedTensors &entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error("checkpoint: cannot open " + path + " for writing");
  write_igtc(out, entries);
}

NamedTensors read_igtc_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("checkpoint: cannot open " + path);
  return read_igtc(in);
}

} // namespace igt
