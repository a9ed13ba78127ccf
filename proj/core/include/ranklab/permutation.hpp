#pragma once

// Vertex permutations: position(v) is the rank of v, order is its inverse.

#include <cstdint>
#include <vector>

#include "ranklab/rng.hpp"

namespace ranklab {

class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n);
  // order[i] = vertex at rank i. Throws if not a bijection on 0..n-1.
  static Permutation from_order(std::vector<int> order);
  // position[v] = rank of v.
  static Permutation from_position(const std::vector<int>& position);
  // Uniform draw via Fisher-Yates.
  static Permutation random(int n, Rng& rng);

  int n() const { return static_cast<int>(order_.size()); }
  int position(int v) const { return position_[v]; }
  int at(int rank) const { return order_[rank]; }
  const std::vector<int>& order() const { return order_; }
  const std::vector<int>& positions() const { return position_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

// Permutation of {0..n-1} with the given lexicographic rank (factorial
// number system); n <= 20, rank < n!.
std::vector<int> unrank_permutation(int n, std::uint64_t rank);

}  // namespace ranklab
