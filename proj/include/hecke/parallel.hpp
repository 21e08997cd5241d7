#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hecke {

/// Worker count: HECKE_THREADS if set (0 = auto), else hardware concurrency.
inline unsigned worker_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HECKE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

/// Splits [0, count) into contiguous chunks, runs body(chunk_index, begin, end)
/// on each, and rethrows the first exception. Returns the number of chunks so
/// callers can merge per-chunk results in order.
template <typename Body>
std::size_t parallel_chunks(std::size_t count, Body&& body, std::size_t min_chunk = 64) {
  const std::size_t workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, count / min_chunk));
  if (workers <= 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return 1;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(count, w * step), end = std::min(count, begin + step);
    threads.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return workers;
}

/// Number of chunks parallel_chunks will use for count items.
inline std::size_t chunk_count(std::size_t count, std::size_t min_chunk = 64) {
  return std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, count / min_chunk)));
}

}  // namespace hecke
