#pragma once

// Reproducible instance generators. Every generator emits the graph plus a
// planted perfect matching; experiments use the planted matching as OPT
// verbatim instead of re-deriving one, which keeps runs deterministic.

#include <cstdint>

#include "ranklab/graph.hpp"

namespace ranklab {

struct Instance {
  Graph graph;
  Matching planted_opt;
};

// `copies` disjoint 4-vertex gadgets. Copy i occupies ids 4i..4i+3, laid
// out as the path (4i)-(4i+1)-(4i+2)-(4i+3) with planted edges {4i, 4i+1}
// and {4i+2, 4i+3}; the middle edge is the trap a greedy run can take,
// stranding both outer vertices. Throws for copies < 1.
Instance gen_gadget_chain(int copies);

// 2b disjoint block-offset copies of g (copy i occupies [i*n, (i+1)*n)),
// with opt replicated per copy. Per-copy statistics are preserved, so the
// copy count can be chosen to make c * n' / 2 integral. opt must be perfect
// in g and b >= 1.
Instance gen_replicated(const Graph& g, const Matching& opt, int b);

// Perfect matching on a uniformly random pairing of n vertices, plus each
// non-matching edge independently with probability extra_edge_prob.
// Requires even nonnegative n and a probability in [0, 1]; deterministic
// given the seed.
Instance gen_random_planted(int n, double extra_edge_prob, std::uint64_t seed);

}  // namespace ranklab
