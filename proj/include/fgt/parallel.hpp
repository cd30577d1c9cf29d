#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fgt {

/// Worker count: FGT_WORKERS if set and positive, otherwise the hardware concurrency.
inline std::size_t default_workers() {
  if (const char* env = std::getenv("FGT_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const auto hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs body(i) for i in [0, n) on up to `workers` threads. The exception thrown by the
/// lowest failing index is rethrown, so failures are schedule-independent.
template <class Body>
void parallel_for(std::size_t n, Body&& body, std::size_t workers = default_workers()) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr failure;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (i < failed_at) {
          failed_at = i;
          failure = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min(workers, n);
  for (std::size_t w = 0; w < count; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace fgt
