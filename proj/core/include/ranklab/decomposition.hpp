#pragma once

// Symmetric-difference decomposition M (+) OPT: every component is a simple
// path or an even alternating cycle. Length-three augmenting paths are the
// structure the whole analysis counts, so they get first-class treatment.

#include <vector>

#include "ranklab/graph.hpp"

namespace ranklab {

// Path a-b-c-d with {a,b},{c,d} in OPT, {b,c} in M, and a,d unmatched in M.
// Canonically oriented with the smaller endpoint first (a < d).
struct Aug3Path {
  int a;
  int b;
  int c;
  int d;

  friend auto operator<=>(const Aug3Path&, const Aug3Path&) = default;
};

struct Component {
  std::vector<int> vertices;  // path order; for cycles the walk without repeating the start
  bool is_cycle = false;
  bool augmenting = false;  // augmenting for M
  int length() const {
    return static_cast<int>(vertices.size()) - (is_cycle ? 0 : 1);
  }
};

struct AugDecomposition {
  std::vector<Component> components;
  std::vector<Aug3Path> aug3;  // sorted by first endpoint
};

// Both matchings must be valid in g (throws std::invalid_argument otherwise).
AugDecomposition symmetric_difference(const Matching& m, const Matching& opt,
                                      const Graph& g);

// Independent per-edge characterization: an M-edge {x,y} is the middle of a
// length-three augmenting path iff the OPT-mates of x and y both exist and
// are unmatched in M. Used as the allocation-free inner loop of sweeps and
// cross-checked against the component scan.
int count_aug3_by_edge_scan(const Matching& m, const Matching& opt);

}  // namespace ranklab
