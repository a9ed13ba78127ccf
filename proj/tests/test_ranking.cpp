#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ranklab/blossom.hpp"
#include "ranklab/decomposition.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/ranking.hpp"
#include "test_support.hpp"

using namespace ranklab;

TEST_CASE("ranking follows the arrival-order trace by hand") {
  // Path 0-1-2-3. Arrival order 2,0,1,3: vertex 2 arrives first and matches
  // its minimum-rank unmatched neighbor. Neighbors of 2 are {1,3}; rank of
  // 1 is 2, rank of 3 is 3, so 2 matches 1. Then 0 arrives: only neighbor 1
  // is taken, so 0 stays single, and so does 3.
  const Graph path4 = parse_graph("4 3\n0 1\n1 2\n2 3\n");
  const Matching m = ranking_run(path4, Permutation::from_order({2, 0, 1, 3}));
  CHECK(m.edges() == std::vector<Edge>{{1, 2}});

  // Arrival order 0,3,1,2 gives the perfect matching.
  const Matching p = ranking_run(path4, Permutation::from_order({0, 3, 1, 2}));
  CHECK(p.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("ranking matches the reference simulator on every permutation") {
  const std::vector<std::string> graphs = {
      "4 3\n0 1\n1 2\n2 3\n",                       // path
      "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n",             // 5-cycle
      "6 7\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n2 3\n",   // bridged triangles
      "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n",  // K_{3,3}
  };
  for (const std::string& text : graphs) {
    const Graph g = parse_graph(text);
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    do {
      const Permutation perm = Permutation::from_order(order);
      const Matching mine = ranking_run(g, perm);
      const std::vector<int> reference = testsupport::reference_ranking(g, perm);
      CHECK(mine.mates() == reference);
      CHECK(testsupport::reference_is_maximal(g, mine.mates()));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("all three greedy algorithms emit valid maximal matchings") {
  const Instance inst = gen_random_planted(12, 0.3, 31);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::vector<Matching> runs = {
        sample_ranking(inst.graph, seed).matching,
        mrg_run(inst.graph, seed).matching,
        edge_greedy_run(inst.graph, seed).matching};
    for (const Matching& m : runs) {
      const MatchingFlags flags = validate_matching(inst.graph, m);
      CHECK(flags.valid);
      CHECK(flags.maximal);
    }
  }
}

TEST_CASE("exhaustive stats on the path gadget are exact") {
  const Instance gadget = gen_gadget_chain(1);
  const ExhaustiveStats stats =
      exhaustive_stats(gadget.graph, gadget.planted_opt, {1});
  CHECK(stats.n == 4);
  CHECK(stats.mu == 2);
  CHECK(stats.n_factorial == 24);
  CHECK(stats.size_histogram.at(1) == 6);
  CHECK(stats.size_histogram.at(2) == 18);
  CHECK(stats.expected_size() == Rat(7, 4));
  CHECK(stats.expected_ratio() == Rat(7, 8));
  CHECK(stats.aug3_histogram.at(0) == 18);
  CHECK(stats.aug3_histogram.at(1) == 6);
  CHECK(stats.expected_kwis.at(1) == Rat(1, 4));
  CHECK(stats.aug3_bound_violations == 0);
  CHECK(stats.counterpart_violations == 0);
}

TEST_CASE("exhaustive aug3 histogram matches a brute-force pair scan") {
  const std::vector<std::string> graphs = {
      "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n",  // 6-cycle
      "6 7\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n1 4\n",
  };
  for (const std::string& text : graphs) {
    const Graph g = parse_graph(text);
    const Matching opt = maximum_matching(g);
    REQUIRE(validate_matching(g, opt).perfect);

    std::map<int, Int> expected_hist;
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    do {
      const Permutation perm = Permutation::from_order(order);
      const Matching r = ranking_run(g, perm);
      expected_hist[testsupport::reference_aug3_count(g, r, opt)] += 1;
    } while (std::next_permutation(order.begin(), order.end()));

    const ExhaustiveStats stats = exhaustive_stats(g, opt, {});
    CHECK(stats.aug3_histogram == expected_hist);
  }
}

TEST_CASE("per-edge aug3 scan equals pair scan and path decomposition") {
  const Instance inst = gen_random_planted(12, 0.25, 9);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Matching r = sample_ranking(inst.graph, seed).matching;
    const int scan = count_aug3_by_edge_scan(r, inst.planted_opt);
    CHECK(scan ==
          testsupport::reference_aug3_count(inst.graph, r, inst.planted_opt));

    const AugDecomposition decomp =
        symmetric_difference(r, inst.planted_opt, inst.graph);
    CHECK(static_cast<int>(decomp.aug3.size()) == scan);
    for (const Aug3Path& p : decomp.aug3) {
      // Canonical orientation and the defining incidences.
      CHECK(p.a < p.d);
      CHECK(inst.planted_opt.mate(p.a) == p.b);
      CHECK(inst.planted_opt.mate(p.c) == p.d);
      CHECK(r.mate(p.b) == p.c);
      CHECK(r.mate(p.a) == -1);
      CHECK(r.mate(p.d) == -1);
    }
    // Every component of the symmetric difference is a path or even cycle.
    for (const Component& comp : decomp.components) {
      if (comp.is_cycle) CHECK(comp.length() % 2 == 0);
    }
  }
}

TEST_CASE("exhaustive stats are independent of thread count and cap-guarded") {
  const Instance inst = gen_random_planted(6, 0.4, 12);
  ExhaustiveOptions one;
  one.threads = 1;
  ExhaustiveOptions many;
  many.threads = 4;
  const ExhaustiveStats a = exhaustive_stats(inst.graph, inst.planted_opt, {1}, one);
  const ExhaustiveStats b = exhaustive_stats(inst.graph, inst.planted_opt, {1}, many);
  CHECK(a.size_histogram == b.size_histogram);
  CHECK(a.aug3_histogram == b.aug3_histogram);
  CHECK(a.expected_kwis == b.expected_kwis);
  CHECK(a.sum_sizes == b.sum_sizes);

  ExhaustiveOptions tight;
  tight.cap = 5;
  CHECK_THROWS_AS(exhaustive_stats(inst.graph, inst.planted_opt, {}, tight),
                  CapExceeded);
  // A non-maximum OPT is rejected.
  CHECK_THROWS_AS(
      exhaustive_stats(inst.graph, Matching::from_edges(inst.graph.n(), {}), {}),
      std::invalid_argument);
}

TEST_CASE("monte carlo estimate converges to the exhaustive mean") {
  const Instance gadget = gen_gadget_chain(1);
  const RatioEstimate est = estimate_ratio(gadget.graph, gadget.planted_opt,
                                           200000, 5, GreedyKind::kRanking, 0);
  // Exhaustive mean ratio is 7/8; require agreement within 3 standard errors.
  CHECK(std::abs(est.mean_ratio - 0.875) <= 3.0 * est.stderr_ratio);
  CHECK(est.ci95_lo <= est.mean_ratio);
  CHECK(est.mean_ratio <= est.ci95_hi);
  const std::uint64_t total = std::accumulate(
      est.size_histogram.begin(), est.size_histogram.end(), std::uint64_t{0},
      [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
  CHECK(total == est.samples);
}

TEST_CASE("monte carlo estimates are reproducible across thread counts") {
  const Instance inst = gen_random_planted(10, 0.35, 77);
  const RatioEstimate a =
      estimate_ratio(inst.graph, inst.planted_opt, 50000, 3, GreedyKind::kMrg, 1);
  const RatioEstimate b =
      estimate_ratio(inst.graph, inst.planted_opt, 50000, 3, GreedyKind::kMrg, 4);
  CHECK(a.size_histogram == b.size_histogram);
  CHECK(a.mean_ratio == b.mean_ratio);
  CHECK(a.stderr_ratio == b.stderr_ratio);
}

TEST_CASE("baseline means on the path match first-principles values") {
  // On the path 0-1-2-3, MRG matches 1-2 first with probability 1/4 (the
  // expected size is then 1) and otherwise reaches size 2: E|M| = 7/4.
  // Edge-greedy picks one of three edges uniformly; picking the middle edge
  // (probability 1/3) blocks the rest: E|M| = 1/3*1 + 2/3*2 = 5/3.
  const Graph path4 = parse_graph("4 3\n0 1\n1 2\n2 3\n");
  const Matching opt = Matching::from_edges(4, {{0, 1}, {2, 3}});
  const RatioEstimate mrg =
      estimate_ratio(path4, opt, 400000, 21, GreedyKind::kMrg, 0);
  CHECK(std::abs(mrg.mean_size - 1.75) <= 3.0 * 2.0 * mrg.stderr_ratio);
  const RatioEstimate eg =
      estimate_ratio(path4, opt, 400000, 22, GreedyKind::kEdgeGreedy, 0);
  CHECK(std::abs(eg.mean_size - 5.0 / 3.0) <= 3.0 * 2.0 * eg.stderr_ratio);
}

TEST_CASE("greedy kind names round trip") {
  for (const GreedyKind kind :
       {GreedyKind::kRanking, GreedyKind::kMrg, GreedyKind::kEdgeGreedy}) {
    const auto parsed = parse_greedy_kind(greedy_kind_name(kind));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == kind);
  }
  CHECK_FALSE(parse_greedy_kind("simplex").has_value());
}
