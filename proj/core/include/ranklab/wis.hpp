#pragma once

// Wasteful independent sets: a set of 2k vertices that are the endpoints of
// k length-three augmenting paths of R (+) OPT. This module detects them
// with certificates, counts them, verifies the counterpart ordering, and
// measures the probability of a fixed endpoint set under a uniformly random
// RANKING permutation — exactly below the exhaustive cap, sampled above it.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ranklab/bigmath.hpp"
#include "ranklab/decomposition.hpp"
#include "ranklab/graph.hpp"
#include "ranklab/permutation.hpp"
#include "ranklab/sweep.hpp"

namespace ranklab {

struct WisCertificate {
  std::vector<int> vertices;  // I, sorted ascending
  std::vector<Aug3Path> paths;  // the |I|/2 witnessing paths, canonical order
  // (v, counterpart(v)) for each middle-edge vertex v, sorted by v. The
  // counterpart of a middle-edge vertex is the unmatched endpoint on the
  // opposite side of its path.
  std::vector<std::pair<int, int>> counterpart;
};

// Certificate iff I is exactly the endpoint set of |I|/2 length-three
// augmenting paths of r (+) opt; nullopt otherwise. opt must be perfect in
// g and r valid and maximal; odd-sized, duplicated, or out-of-range I is a
// malformed query. All violations throw std::invalid_argument. Empty I
// yields the vacuous certificate.
std::optional<WisCertificate> is_kwis(const Graph& g, const Matching& r,
                                      const Matching& opt, std::vector<int> I);

// C(a, k) where a = |aug3(r (+) opt)|: each k-subset of the paths yields
// exactly one endpoint set. k outside [0, a] gives 0.
Int count_kwis(const Matching& r, const Matching& opt, const Graph& g, int k);

struct Aug3BoundReport {
  int matching_size = 0;
  int mu = 0;
  Rat alpha;  // |M| = (1/2 + alpha) * mu
  int aug3_count = 0;
  Rat bound;  // (1/2 - 3*alpha) * mu == 2*mu - 3*|M| exactly
  bool pass = false;
};

// Exact-rational check that m (+) opt contains at least (1/2 - 3*alpha) * mu
// disjoint length-three augmenting paths. m must be valid and maximal and
// opt a maximum matching (throws std::invalid_argument otherwise).
Aug3BoundReport verify_aug3_lower_bound(const Graph& g, const Matching& m,
                                        const Matching& opt);

// True iff every middle-edge vertex precedes its counterpart under p.
bool verify_counterpart_order(const WisCertificate& cert, const Permutation& p);

// Full sweep verdict for one endpoint set: its exact probability of being a
// k-WIS, the 1/4^k bound, and the counterpart ordering across every
// permutation where the set hits.
struct SetProbabilityReport {
  std::vector<int> vertices;  // sorted query set
  int k = 0;                  // |vertices| / 2
  Int total;                  // n!
  Int hits;                   // permutations where the set is a k-WIS
  Rat probability;            // hits / total
  Rat bound;                  // 1/4^k
  bool bound_holds = false;
  Int counterpart_checked;     // ordered (v, counterpart) pairs inspected
  Int counterpart_violations;  // pairs with pi(v) >= pi(counterpart)
};

// Exact sweep over all n! permutations. opt must be perfect; I must have
// even size without duplicates — sets that can never be augmenting-path
// endpoints simply get probability 0. Same cap discipline as the
// exhaustive sweeps.
SetProbabilityReport kwis_set_report(const Graph& g, const Matching& opt,
                                     const std::vector<int>& I, int threads = 0,
                                     int cap = kDefaultExhaustiveCap);

// The probability field of kwis_set_report alone.
Rat kwis_probability_exhaustive(const Graph& g, const Matching& opt,
                                const std::vector<int>& I, int threads = 0,
                                int cap = kDefaultExhaustiveCap);

struct ProbabilityEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double point = 0.0;
  double wilson_lo = 0.0;  // 95% Wilson score interval
  double wilson_hi = 0.0;
  std::uint64_t counterpart_checked = 0;
  std::uint64_t counterpart_violations = 0;
};

// Sampled counterpart of kwis_probability_exhaustive for instances beyond
// the cap. Chunked like estimate_ratio: identical for any thread count.
ProbabilityEstimate kwis_probability_montecarlo(const Graph& g,
                                                const Matching& opt,
                                                const std::vector<int>& I,
                                                std::uint64_t samples,
                                                std::uint64_t seed,
                                                int threads = 0);

// C(n/2, 2k) * 3^k, the count bound on distinct k-WIS across all
// permutations. Throws on odd n, negative k, or 2k > n/2.
Int kwis_count_upper_bound(int n, int k);

// All independent vertex sets of the given size, each sorted ascending, in
// lexicographic order. Exponential; intended for small n.
std::vector<std::vector<int>> independent_sets_of_size(const Graph& g, int size);

}  // namespace ranklab
