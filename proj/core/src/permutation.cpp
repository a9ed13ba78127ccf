#include "ranklab/permutation.hpp"

#include <numeric>
#include <stdexcept>

#include "ranklab/bigmath.hpp"

namespace ranklab {

Permutation Permutation::identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return from_order(std::move(order));
}

Permutation Permutation::from_order(std::vector<int> order) {
  const int n = static_cast<int>(order.size());
  Permutation p;
  p.position_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || p.position_[v] != -1)
      throw std::invalid_argument("order is not a permutation of 0..n-1");
    p.position_[v] = i;
  }
  p.order_ = std::move(order);
  return p;
}

Permutation Permutation::from_position(const std::vector<int>& position) {
  const int n = static_cast<int>(position.size());
  std::vector<int> order(n, -1);
  for (int v = 0; v < n; ++v) {
    int i = position[v];
    if (i < 0 || i >= n || order[i] != -1)
      throw std::invalid_argument("position map is not a bijection onto 0..n-1");
    order[i] = v;
  }
  return from_order(std::move(order));
}

Permutation Permutation::random(int n, Rng& rng) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  return from_order(std::move(order));
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
  if (n < 0 || n > 20) throw std::invalid_argument("unrank_permutation: n out of range");
  if (n > 0 && rank >= factorial_u64(static_cast<unsigned>(n)))
    throw std::invalid_argument("unrank_permutation: rank >= n!");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> order;
  order.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t f = factorial_u64(static_cast<unsigned>(i));
    std::size_t digit = static_cast<std::size_t>(rank / f);
    rank %= f;
    order.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return order;
}

}  // namespace ranklab
