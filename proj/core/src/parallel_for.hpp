//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef IGT_SRC_PARALLEL_FOR_HPP_
#define IGT_SRC_PARALLEL_FOR_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace igt::detail {

/// Run fn(i) for i in [0, n) on `workers` threads in contiguous chunks.
/// Results must be written to per-index slots; the first exception rethrows
/// on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn &&fn) {
  if (n == 0)
    return;
  const std::size_t threads = std::min<std::size_t>(
      n, static_cast<std::size_t>(std::max(workers, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      try {
        for (std::size_t i = begin; i < end; ++i)
          fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (std::thread &th : pool)
    th.join();
  for (const std::exception_ptr &e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace igt::detail

#endif // IGT_SRC_PARALLEL_FOR_HPP_
