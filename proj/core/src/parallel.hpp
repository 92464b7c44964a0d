#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace shardfan::detail {

// Runs fn(0..n-1) across the given number of threads. Callers write results
// into preallocated per-index slots, so aggregation order never depends on
// the thread count.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(threads, n);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      int i;
      while ((i = next.fetch_add(1)) < n) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace shardfan::detail
