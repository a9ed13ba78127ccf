#pragma once

// The RANKING randomized greedy matching process and its baselines, with
// three evaluation regimes: single deterministic runs, chunked Monte Carlo
// sampling, and exact exhaustive sweeps over all n! vertex permutations.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ranklab/bigmath.hpp"
#include "ranklab/decomposition.hpp"
#include "ranklab/graph.hpp"
#include "ranklab/permutation.hpp"
#include "ranklab/rng.hpp"
#include "ranklab/sweep.hpp"

namespace ranklab {

enum class GreedyKind { kRanking, kMrg, kEdgeGreedy };

const char* greedy_kind_name(GreedyKind kind);
std::optional<GreedyKind> parse_greedy_kind(const std::string& name);

struct RunRecord {
  // Vertex order for ranking/mrg; edge-index order for the edge greedy.
  Permutation permutation;
  Matching matching;
  int matched_count = 0;  // 2 * |matching|
};

// Deterministic RANKING: vertices are processed by ascending pi-position;
// each still-unmatched vertex is matched to its unmatched neighbor of
// minimum pi-position, if any. The result is maximal.
Matching ranking_run(const Graph& g, const Permutation& pi);

// Allocation-free core of ranking_run for sweep inner loops: resets and
// fills mate, returns the matching size. order/position describe the same
// permutation (order[rank] = v, position[v] = rank).
int ranking_fill(const Graph& g, const std::vector<int>& order,
                 const std::vector<int>& position, std::vector<int>& mate);

// One RANKING run on a uniformly drawn permutation.
RunRecord sample_ranking(const Graph& g, Rng& rng);
RunRecord sample_ranking(const Graph& g, std::uint64_t seed);

// Modified randomized greedy: vertices in uniformly random order, partner
// chosen uniformly at random among currently unmatched neighbors.
RunRecord mrg_run(const Graph& g, Rng& rng);
RunRecord mrg_run(const Graph& g, std::uint64_t seed);

// Edge-iterative greedy: edges in uniformly random order; an edge is taken
// iff both endpoints are still free.
RunRecord edge_greedy_run(const Graph& g, Rng& rng);
RunRecord edge_greedy_run(const Graph& g, std::uint64_t seed);

struct ExhaustiveOptions {
  int threads = 0;                  // 0 = all hardware threads
  int cap = kDefaultExhaustiveCap;  // refuse sweeps on larger n
  // Additionally deduplicate, per requested k, every endpoint set that is a
  // k-wasteful independent set for at least one permutation, with its exact
  // occurrence count. Memory grows with the number of distinct sets, so
  // this is intended for small n.
  bool collect_kwis_sets = false;
};

// Exact tallies over all n! permutations against a fixed maximum matching.
struct ExhaustiveStats {
  int n = 0;
  int mu = 0;  // |OPT| = maximum matching size
  Int n_factorial;
  std::map<int, Int> size_histogram;  // |R_i| -> #permutations
  Int sum_sizes;                      // sum of |R_i|
  std::map<int, Int> aug3_histogram;  // a_i -> #permutations
  Int sum_aug3;                       // s = sum of a_i
  std::map<int, Rat> expected_kwis;   // k -> sum_i C(a_i, k) / n!

  // Permutations whose a_i falls below 2*mu - 3*|R_i|, the exact integer
  // form of the disjoint length-three augmenting path lower bound.
  Int aug3_bound_violations;
  // Ordered pairs (v, counterpart(v)) with pi(v) >= pi(counterpart(v)),
  // summed over every length-three augmenting path of every permutation.
  Int counterpart_violations;

  // Only populated under collect_kwis_sets:
  // k -> sorted endpoint set -> #permutations where it is a k-WIS.
  std::map<int, std::map<std::vector<int>, Int>> kwis_occurrences;

  Rat expected_size() const;
  Rat expected_ratio() const;  // expected_size / mu; 1 when mu = 0
};

// Enumerates all n! permutations, runs RANKING on each, and tallies exact
// statistics against opt. Throws CapExceeded when g.n() > options.cap and
// std::invalid_argument when opt is not a maximum matching of g or a
// requested k is negative.
ExhaustiveStats exhaustive_stats(const Graph& g, const Matching& opt,
                                 const std::vector<int>& ks,
                                 const ExhaustiveOptions& options = {});

struct RatioEstimate {
  std::string algorithm;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int mu = 0;
  double mean_size = 0.0;
  double mean_ratio = 0.0;   // mean_size / mu; 1 when mu = 0
  double stderr_ratio = 0.0;
  double ci95_lo = 0.0;
  double ci95_hi = 0.0;
  std::map<int, std::uint64_t> size_histogram;
};

// Chunked parallel Monte Carlo. Sample chunk j draws from
// Rng::stream(seed, j) and tallies merge by integer addition, so the
// estimate is byte-identical for any thread count. Requires samples >= 1
// and opt valid in g (|opt| supplies mu).
RatioEstimate estimate_ratio(const Graph& g, const Matching& opt,
                             std::uint64_t samples, std::uint64_t seed,
                             GreedyKind kind = GreedyKind::kRanking,
                             int threads = 0);

}  // namespace ranklab
