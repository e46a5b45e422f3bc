#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace taut0 {

// Splits [begin, end) into contiguous chunks, runs fn(chunk_index,
// chunk_begin, chunk_end) on worker threads, one chunk per worker. Callers
// keep per-chunk state and merge it in chunk order, so results do not depend
// on scheduling.
template <typename Fn>
void parallel_chunks(std::int64_t begin, std::int64_t end, int jobs, Fn&& fn) {
  std::int64_t total = end - begin;
  if (total <= 0) return;
  int workers = jobs < 1 ? 1 : jobs;
  if (static_cast<std::int64_t>(workers) > total) workers = static_cast<int>(total);
  if (workers == 1) {
    fn(0, begin, end);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::int64_t base = total / workers, extra = total % workers, at = begin;
  for (int w = 0; w < workers; ++w) {
    std::int64_t len = base + (w < extra ? 1 : 0);
    std::int64_t lo = at, hi = at + len;
    at = hi;
    threads.emplace_back([w, lo, hi, &fn] { fn(w, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace taut0
