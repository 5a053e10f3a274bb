// Minimal fork-join helper for independent trials.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hullseq {

/// Worker count: hardware concurrency, capped by HULLSEED_THREADS when set.
inline int thread_budget() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("HULLSEED_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) n = std::min(n, cap);
    } catch (const std::exception&) {
      // Unparsable values leave the default in place.
    }
  }
  return n;
}

/// Runs f(i) for i in [0, n). Results must be written to per-index slots so
/// the outcome does not depend on scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  // Nested calls run inline so the thread count stays within the budget.
  static thread_local bool inside = false;
  const int workers = inside ? 1 : static_cast<int>(std::min<std::size_t>(n, static_cast<std::size_t>(thread_budget())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      inside = true;
      for (std::size_t i; (i = next.fetch_add(1)) < n;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hullseq
