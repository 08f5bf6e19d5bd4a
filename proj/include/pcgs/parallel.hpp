// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace pcgs {

// Runs fn(i) for i in [0, count) across a small thread pool. Each index is
// processed exactly once; fn must only write state owned by index i so the
// result is identical to a sequential loop.
inline void parallelFor(size_t count, const std::function<void(size_t)>& fn,
                        unsigned threadHint = 0) {
  unsigned nThreads = threadHint ? threadHint : std::thread::hardware_concurrency();
  nThreads = std::max(1u, std::min<unsigned>(nThreads, 16));
  if (nThreads <= 1 || count < 2 * nThreads) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  workers.reserve(nThreads);
  for (unsigned t = 0; t < nThreads; ++t) {
    workers.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& w : workers) w.join();
}

}  // namespace pcgs
