#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fqlab {

/// Splits [0, n) into `threads` contiguous chunks, runs body(lo, hi) on each,
/// and folds the results left to right with merge. The fold order is fixed,
/// so the result does not depend on scheduling.
template <class T, class Body, class Merge>
T parallel_reduce(std::uint64_t n, unsigned threads, T init, Body body, Merge merge) {
  threads = std::max(1u, threads);
  if (threads == 1 || n < 2 * static_cast<std::uint64_t>(threads)) {
    merge(init, body(std::uint64_t{0}, n));
    return init;
  }
  std::vector<T> parts(threads, init);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::uint64_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::uint64_t lo = std::min(n, w * chunk), hi = std::min(n, lo + chunk);
    pool.emplace_back([&, w, lo, hi] {
      try {
        parts[w] = body(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& part : parts) merge(init, part);
  return init;
}

}  // namespace fqlab
