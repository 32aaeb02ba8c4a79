#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gib {

/// Runs fn(i) for i in [0, count) on up to `jobs` threads. Work items are
/// claimed dynamically; the first exception is rethrown after joining.
template <typename Fn> void parallelFor(std::size_t count, unsigned jobs, Fn &&fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(errorMutex);
        if (!error)
          error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back(worker);
  for (auto &th : pool)
    th.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace gib
