#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pasim::detail {

inline unsigned resolve_workers(unsigned requested, std::uint64_t tasks) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(n, std::max<std::uint64_t>(tasks, 1)));
}

/// Calls fn(i) for i in [0, tasks) on up to `workers` threads. Each index runs
/// exactly once; the first exception thrown is rethrown on the caller.
template <class Fn>
void parallel_for(std::uint64_t tasks, unsigned workers, Fn&& fn) {
  const unsigned n = resolve_workers(workers, tasks);
  if (n <= 1) {
    for (std::uint64_t i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (std::uint64_t i = next++; i < tasks; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = tasks;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(n - 1);
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(run);
  run();
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace pasim::detail
