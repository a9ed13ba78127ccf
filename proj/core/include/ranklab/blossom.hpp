#pragma once

// Exact maximum cardinality matching for general graphs (unweighted
// Edmonds blossom algorithm, O(V^3)), plus an exhaustive brute-force
// oracle for small instances.

#include "ranklab/graph.hpp"

namespace ranklab {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Blossom search from each free vertex; the returned matching is maximum.
Matching maximum_matching(const Graph& g);

// Exhaustive search over all matchings; exact but exponential.
// Throws CapExceeded when g.n() exceeds the cap.
Matching brute_force_maximum(const Graph& g, int cap = 16);

// True iff n is even and the maximum matching covers every vertex.
bool has_perfect_matching(const Graph& g);

}  // namespace ranklab
