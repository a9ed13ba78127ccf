#include "ranklab/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "ranklab/rng.hpp"

namespace ranklab {

Instance gen_gadget_chain(int copies) {
  if (copies < 1) throw std::invalid_argument("need at least one gadget copy");
  std::vector<Edge> edges;
  std::vector<Edge> planted;
  edges.reserve(static_cast<std::size_t>(copies) * 3);
  planted.reserve(static_cast<std::size_t>(copies) * 2);
  for (int i = 0; i < copies; ++i) {
    const int base = 4 * i;
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base + 1, base + 2);
    edges.emplace_back(base + 2, base + 3);
    planted.emplace_back(base, base + 1);
    planted.emplace_back(base + 2, base + 3);
  }
  const int n = 4 * copies;
  return Instance{Graph::from_edges(n, std::move(edges)),
                  Matching::from_edges(n, std::move(planted))};
}

Instance gen_replicated(const Graph& g, const Matching& opt, int b) {
  if (b < 1) throw std::invalid_argument("need b >= 1");
  const MatchingFlags flags = validate_matching(g, opt);
  if (!flags.valid || !flags.perfect) {
    throw std::invalid_argument("opt must be a perfect matching in g");
  }
  const int copies = 2 * b;
  const int n = g.n();
  std::vector<Edge> edges;
  std::vector<Edge> planted;
  edges.reserve(static_cast<std::size_t>(g.m()) * static_cast<std::size_t>(copies));
  planted.reserve(static_cast<std::size_t>(opt.size()) * static_cast<std::size_t>(copies));
  for (int i = 0; i < copies; ++i) {
    const int offset = i * n;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    for (const Edge& e : opt.edges()) planted.emplace_back(e.u + offset, e.v + offset);
  }
  return Instance{Graph::from_edges(n * copies, std::move(edges)),
                  Matching::from_edges(n * copies, std::move(planted))};
}

Instance gen_random_planted(int n, double extra_edge_prob, std::uint64_t seed) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("n must be even and nonnegative");
  }
  if (!(extra_edge_prob >= 0.0) || !(extra_edge_prob <= 1.0)) {
    throw std::invalid_argument("extra_edge_prob must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  std::vector<Edge> planted;
  planted.reserve(static_cast<std::size_t>(n) / 2);
  for (int i = 0; i < n; i += 2) {
    const int u = order[static_cast<std::size_t>(i)];
    const int v = order[static_cast<std::size_t>(i + 1)];
    planted.emplace_back(u, v);
    mate[static_cast<std::size_t>(u)] = v;
    mate[static_cast<std::size_t>(v)] = u;
  }

  std::vector<Edge> edges = planted;
  const bool always = extra_edge_prob >= 1.0;
  const bool never = extra_edge_prob <= 0.0;
  // One 64-bit draw per candidate pair; acceptance threshold in fixed point.
  const double scaled = extra_edge_prob * 18446744073709551616.0;
  const bool saturated = scaled >= 18446744073709551616.0;
  const std::uint64_t threshold =
      (always || never || saturated) ? 0 : static_cast<std::uint64_t>(scaled);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (mate[static_cast<std::size_t>(u)] == v) continue;
      bool take;
      if (always) {
        take = true;
      } else if (never) {
        take = false;
      } else {
        const std::uint64_t draw = rng.next_u64();
        take = saturated || draw < threshold;
      }
      if (take) edges.emplace_back(u, v);
    }
  }
  return Instance{Graph::from_edges(n, std::move(edges)),
                  Matching::from_edges(n, std::move(planted))};
}

}  // namespace ranklab
