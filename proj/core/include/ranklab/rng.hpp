#pragma once

// Seeded randomness with documented, splittable streams.
//
// Stream derivation: stream(master, i) seeds an mt19937_64 with
// splitmix64(master + (i + 1) * 0x9E3779B97F4A7C15). Workers and sample
// chunks take consecutive stream indices, so results are reproducible for
// any thread count. Bounded draws use rejection sampling, which keeps the
// sequence independent of the standard library's distribution internals.

#include <cstdint>
#include <random>
#include <vector>

namespace ranklab {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static Rng stream(std::uint64_t master, std::uint64_t index) {
    return Rng(master + (index + 1) * kGolden);
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw from {0, ..., bound-1}; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline const char* rng_algorithm_name() { return "mt19937_64+splitmix64-streams"; }

}  // namespace ranklab
