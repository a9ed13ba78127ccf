#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "ranklab/blossom.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/ranking.hpp"
#include "ranklab/wis.hpp"
#include "test_support.hpp"

using namespace ranklab;

TEST_CASE("kwis certificate on the path gadget") {
  // Path 0-1-2-3 with OPT = {01, 23}. The run that matches only 1-2 leaves
  // {0,3} unmatched, and 0-1-2-3 is the augmenting path: {0,3} is a 1-WIS.
  const Instance gadget = gen_gadget_chain(1);
  const Matching r = Matching::from_edges(4, {{1, 2}});

  const auto cert = is_kwis(gadget.graph, r, gadget.planted_opt, {0, 3});
  REQUIRE(cert.has_value());
  CHECK(cert->vertices == std::vector<int>{0, 3});
  REQUIRE(cert->paths.size() == 1);
  CHECK(cert->paths[0] == Aug3Path{0, 1, 2, 3});
  // Counterparts pair the path's interior with the opposite endpoint.
  CHECK(cert->counterpart ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 0}});

  // The perfect run has no unmatched vertices, so no certificate.
  const Matching perfect = Matching::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_kwis(gadget.graph, perfect, gadget.planted_opt, {0, 3}).has_value());

  // Bad sets are rejected outright.
  CHECK_THROWS_AS(is_kwis(gadget.graph, r, gadget.planted_opt, {0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_kwis(gadget.graph, r, gadget.planted_opt, {0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_kwis(gadget.graph, r, gadget.planted_opt, {0, 9}),
                  std::invalid_argument);
}

TEST_CASE("kwis requires every path to stay inside the set") {
  // Two gadgets; run matches the middle edge of each.
  const Instance two = gen_gadget_chain(2);
  const Matching r = Matching::from_edges(8, {{1, 2}, {5, 6}});
  // The full endpoint set is a 2-WIS.
  CHECK(is_kwis(two.graph, r, two.planted_opt, {0, 3, 4, 7}).has_value());
  // Mixing endpoints across gadgets leaves paths half-outside: not a k-WIS.
  CHECK_FALSE(is_kwis(two.graph, r, two.planted_opt, {0, 4}).has_value());
  CHECK_FALSE(is_kwis(two.graph, r, two.planted_opt, {0, 3, 4, 5}).has_value());
}

TEST_CASE("count_kwis agrees with direct certificate enumeration") {
  const Instance inst = gen_random_planted(8, 0.3, 3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Matching r = sample_ranking(inst.graph, seed).matching;
    for (int k = 1; k <= 2; ++k) {
      Int direct = 0;
      for (const auto& subset :
           independent_sets_of_size(inst.graph, 2 * k)) {
        if (is_kwis(inst.graph, r, inst.planted_opt, subset)) direct += 1;
      }
      CHECK(count_kwis(r, inst.planted_opt, inst.graph, k) == direct);
    }
  }
}

TEST_CASE("independent set enumeration matches the definition") {
  const Graph g = parse_graph("5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");  // 5-cycle
  const auto pairs = independent_sets_of_size(g, 2);
  CHECK(pairs.size() == 5);  // C(5,2)=10 pairs minus 5 edges
  for (const auto& s : pairs) {
    CHECK(testsupport::reference_is_independent(g, s));
  }
  CHECK(independent_sets_of_size(g, 3).empty());  // independence number is 2
}

TEST_CASE("aug3 lower bound report on deterministic runs") {
  const Instance inst = gen_random_planted(10, 0.3, 17);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Matching r = sample_ranking(inst.graph, seed).matching;
    const Aug3BoundReport report =
        verify_aug3_lower_bound(inst.graph, r, inst.planted_opt);
    CHECK(report.pass);
    CHECK(report.mu == 5);
    CHECK(report.alpha ==
          Rat(report.matching_size, report.mu) - Rat(1, 2));
    // bound = (1/2 - 3*alpha) * mu, cleared to the integer 2*mu - 3*|M|.
    CHECK(report.bound == Rat(2 * report.mu - 3 * report.matching_size));
    CHECK(Rat(report.aug3_count) >= report.bound);
  }
}

TEST_CASE("set probability report on the gadget instances") {
  const Instance one = gen_gadget_chain(1);
  const SetProbabilityReport g4 =
      kwis_set_report(one.graph, one.planted_opt, {0, 3});
  CHECK(g4.k == 1);
  CHECK(g4.total == 24);
  CHECK(g4.hits == 6);
  CHECK(g4.probability == Rat(1, 4));
  CHECK(g4.bound == Rat(1, 4));
  CHECK(g4.bound_holds);
  CHECK(g4.counterpart_violations == 0);
  CHECK(g4.counterpart_checked == 12);  // two ordered checks per hit

  const Instance two = gen_gadget_chain(2);
  const SetProbabilityReport g8 =
      kwis_set_report(two.graph, two.planted_opt, {0, 3, 4, 7});
  CHECK(g8.k == 2);
  CHECK(g8.probability == Rat(1, 16));
  CHECK(g8.bound == Rat(1, 16));
  CHECK(g8.bound_holds);
  CHECK(g8.counterpart_violations == 0);

  // A dependent or unreachable set has probability zero, never an error.
  const SetProbabilityReport adjacent =
      kwis_set_report(one.graph, one.planted_opt, {0, 1});
  CHECK(adjacent.probability == 0);
  CHECK(adjacent.bound_holds);
}

TEST_CASE("every independent 2k-subset respects the 1/4^k ceiling on G4") {
  const Instance one = gen_gadget_chain(1);
  for (const auto& pair : independent_sets_of_size(one.graph, 2)) {
    const SetProbabilityReport report =
        kwis_set_report(one.graph, one.planted_opt, pair);
    CHECK(report.probability <= Rat(1, 4));
  }
}

TEST_CASE("monte carlo set probability brackets the exact value") {
  const Instance two = gen_gadget_chain(2);
  const ProbabilityEstimate est = kwis_probability_montecarlo(
      two.graph, two.planted_opt, {0, 3, 4, 7}, 200000, 6, 0);
  CHECK(est.samples == 200000);
  CHECK(est.wilson_lo <= 0.0625);
  CHECK(0.0625 <= est.wilson_hi);
  CHECK(est.counterpart_violations == 0);

  // Thread-count independence.
  const ProbabilityEstimate re = kwis_probability_montecarlo(
      two.graph, two.planted_opt, {0, 3, 4, 7}, 200000, 6, 3);
  CHECK(re.hits == est.hits);
}

TEST_CASE("counterpart ordering holds on every hit across instances") {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const Instance inst = gen_random_planted(8, 0.25, seed);
    for (const auto& set : independent_sets_of_size(inst.graph, 2)) {
      const SetProbabilityReport report =
          kwis_set_report(inst.graph, inst.planted_opt, set);
      CHECK(report.counterpart_violations == 0);
    }
  }
}

TEST_CASE("kwis count upper bound formula") {
  // C(n/2, 2k) * 3^k with n=20, k=2: C(10,4)*9 = 210*9 = 1890.
  CHECK(kwis_count_upper_bound(20, 2) == 1890);
  // n=4, k=1: C(2,2) * 3 = 3.
  CHECK(kwis_count_upper_bound(4, 1) == 3);
}
