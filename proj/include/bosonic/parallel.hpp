#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bosonic {

/// Worker count from BOSONIC_MOMENTS_JOBS, else the machine's parallelism.
unsigned default_jobs();

/// results[i] = fn(i) for i < count, on up to `jobs` threads. Results keep
/// index order whatever the completion order; the first exception thrown by
/// any task is rethrown after all workers stop.
template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned jobs,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> results(count);
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  const unsigned threads = jobs < count ? jobs : static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace bosonic
