#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace closeness {

struct ExecOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

inline unsigned resolve_threads(const ExecOptions& opts, std::size_t work) {
  unsigned t = opts.threads != 0 ? opts.threads : std::thread::hardware_concurrency();
  t = std::max(1u, t);
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

// Calls body(i) for every i in [0, count). Indices are handed out
// dynamically, so body must only write to index-owned state. The first
// exception thrown by any worker is rethrown after all workers join.
template <typename Body>
void parallel_for(std::size_t count, const ExecOptions& opts, Body&& body) {
  const unsigned threads = resolve_threads(opts, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace closeness
