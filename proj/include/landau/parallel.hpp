#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace landau {

/// Worker count for `requested` (0 = hardware concurrency).
inline unsigned resolve_jobs(unsigned requested) {
  if (requested) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(i) for i in [0, count) on up to `jobs` threads. Results must be
/// written to pre-sized slots; the first exception thrown by any call is
/// rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  jobs = std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(count, 1));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace landau
