#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace rtg {

// Runs fn(i) for i in [0, count) across up to `threads` worker threads.
// Work items must be independent and should write into preallocated
// per-index slots, keeping aggregate output independent of scheduling.
template <typename F>
void parallel_for(std::uint64_t count, unsigned threads, F&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      fn(i);
    }
  };
  unsigned k = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, count));
  std::vector<std::thread> pool;
  pool.reserve(k);
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
  for (std::thread& th : pool) th.join();
}

}  // namespace rtg
