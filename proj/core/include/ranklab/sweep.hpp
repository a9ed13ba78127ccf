#pragma once

// Parallel enumeration of all n! vertex permutations in lexicographic order.
// The rank space is split into one contiguous range per worker; each worker
// owns private state and the caller folds the workers in range order, so the
// reduction is deterministic for any thread count.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

#include "ranklab/bigmath.hpp"
#include "ranklab/permutation.hpp"

namespace ranklab {

constexpr int kDefaultExhaustiveCap = 11;

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Worker must provide: void visit(const std::vector<int>& order,
//                                 const std::vector<int>& position);
// Returns the workers in rank-range order after all ranges complete.
template <class Worker>
std::vector<Worker> permutation_sweep(int n, int threads, const Worker& prototype) {
  const std::uint64_t total = factorial_u64(static_cast<unsigned>(n));
  int t = resolve_threads(threads);
  if (static_cast<std::uint64_t>(t) > total) t = static_cast<int>(total);

  std::vector<Worker> workers(static_cast<std::size_t>(t), prototype);
  auto run_range = [n](Worker& w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<int> order = unrank_permutation(n, lo);
    std::vector<int> position(static_cast<std::size_t>(n));
    for (std::uint64_t r = lo; r < hi; ++r) {
      for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[i])] = i;
      w.visit(order, position);
      std::next_permutation(order.begin(), order.end());
    }
  };

  if (t <= 1) {
    run_range(workers[0], 0, total);
    return workers;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) {
    std::uint64_t lo = total / t * i + std::min<std::uint64_t>(i, total % t);
    std::uint64_t hi = lo + total / t + (static_cast<std::uint64_t>(i) < total % t ? 1 : 0);
    pool.emplace_back(run_range, std::ref(workers[static_cast<std::size_t>(i)]), lo, hi);
  }
  for (auto& th : pool) th.join();
  return workers;
}

}  // namespace ranklab
