#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace nsring {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Run fn(i) for i in [0, n) on a bounded pool. fn must only touch state
// owned by instance i; results keyed by index stay deterministic whatever
// the job count.
template <typename Fn>
void parallel_for(int64_t n, int jobs, Fn&& fn) {
  if (n <= 0) return;
  int nw = static_cast<int>(std::min<int64_t>(resolve_jobs(jobs), n));
  if (nw <= 1) {
    for (int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      int64_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nw));
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

} // namespace nsring
