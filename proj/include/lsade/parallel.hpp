#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lsade {

// Runs body(i) for i in [0, n_items). Items must be independent; results
// written to disjoint slots stay deterministic regardless of thread count.
inline void parallel_for(int n_items, int threads,
                         const std::function<void(int)>& body) {
  if (n_items <= 0) return;
  if (threads <= 1 || n_items == 1) {
    for (int i = 0; i < n_items; ++i) body(i);
    return;
  }
  const int n_workers = std::min(threads, n_items);
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(n_workers));
  for (int w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n_items || failed.load()) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace lsade
