#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace polysym {

/// Worker count: POLYSYM_THREADS if set and positive, else `requested` if
/// positive, else the hardware concurrency.
inline unsigned resolve_threads(int requested = 0) {
  if (const char* env = std::getenv("POLYSYM_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  if (requested > 0) return static_cast<unsigned>(requested);
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Applies fn to every item on a pool of workers; results keep the input
/// order, so output is independent of scheduling. The first exception thrown
/// by any job is rethrown after all workers stop.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, unsigned threads = 1) {
  using R = decltype(fn(items.front()));
  std::vector<R> results(items.size());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = items.size();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace polysym
