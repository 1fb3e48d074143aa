#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace gaugekit {

/// Worker count from GAUGEKIT_WORKERS, else hardware concurrency.
inline int default_workers() {
  if (const char* env = std::getenv("GAUGEKIT_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(i) for i in [0, n) over a static strided split. Any result must be
/// written to slot i, so the outcome never depends on the worker count. The
/// first exception thrown by a worker is rethrown on the caller.
template <typename Body>
void parallel_for(std::size_t n, int workers, Body&& body) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = static_cast<std::size_t>(w); i < n; i += static_cast<std::size_t>(workers)) body(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first) first = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

/// Pairwise sum with a shape fixed by the length alone.
template <typename T>
T tree_sum(const T* v, std::size_t n) {
  if (n == 0) return T{};
  if (n == 1) return v[0];
  const std::size_t half = n / 2;
  return tree_sum(v, half) + tree_sum(v + half, n - half);
}
template <typename T>
T tree_sum(const std::vector<T>& v) {
  return tree_sum(v.data(), v.size());
}

}  // namespace gaugekit
