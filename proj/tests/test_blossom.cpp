#include <doctest.h>

#include <map>

#include "ranklab/blossom.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/graph.hpp"
#include "ranklab/rng.hpp"
#include "test_support.hpp"

using namespace ranklab;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
  const std::uint64_t threshold =
      static_cast<std::uint64_t>(p * 18446744073709551616.0);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_u64() < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("blossom handles textbook odd-cycle cases") {
  // Triangle: maximum matching has one edge.
  CHECK(maximum_matching(parse_graph("3 3\n0 1\n1 2\n0 2\n")).size() == 1);
  // Two triangles joined by a bridge: perfect matching exists (size 3).
  const Graph bowtie_bridge =
      parse_graph("6 7\n0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n2 3\n");
  CHECK(maximum_matching(bowtie_bridge).size() == 3);
  CHECK(has_perfect_matching(bowtie_bridge));
  // Petersen graph is 3-regular with a perfect matching.
  const Graph petersen = parse_graph(
      "10 15\n0 1\n1 2\n2 3\n3 4\n0 4\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n"
      "9 6\n6 8\n8 5\n");
  CHECK(maximum_matching(petersen).size() == 5);
  // Star K_{1,4}: only one edge fits.
  CHECK(maximum_matching(parse_graph("5 4\n0 1\n0 2\n0 3\n0 4\n")).size() == 1);
  // Empty graph.
  CHECK(maximum_matching(parse_graph("4 0\n")).size() == 0);
}

TEST_CASE("blossom output is always a valid matching of maximum size") {
  Rng rng(20260501);
  const std::vector<double> densities = {0.1, 0.25, 0.5, 0.8};
  int instances = 0;
  for (int round = 0; round < 130; ++round) {
    const int n = 2 + static_cast<int>(rng.below(13));  // up to 14
    const double p = densities[round % densities.size()];
    const Graph g = random_graph(n, p, rng);
    const Matching m = maximum_matching(g);
    CHECK(validate_matching(g, m).valid);
    CHECK(m.size() == testsupport::reference_max_matching_size(g));
    ++instances;
  }
  CHECK(instances == 130);
}

TEST_CASE("blossom agrees with the in-library brute force") {
  Rng rng(777);
  for (int round = 0; round < 60; ++round) {
    const int n = 2 + static_cast<int>(rng.below(11));
    const Graph g = random_graph(n, 0.35, rng);
    CHECK(maximum_matching(g).size() == brute_force_maximum(g).size());
  }
  CHECK_THROWS_AS(brute_force_maximum(gen_gadget_chain(5).graph, 16),
                  CapExceeded);
}

TEST_CASE("blossom is invariant under vertex relabeling") {
  Rng rng(424242);
  for (int round = 0; round < 40; ++round) {
    const int n = 3 + static_cast<int>(rng.below(10));
    const Graph g = random_graph(n, 0.4, rng);
    std::vector<int> relabel(n);
    for (int v = 0; v < n; ++v) relabel[v] = v;
    rng.shuffle(relabel);
    std::vector<Edge> mapped;
    for (const Edge& e : g.edges()) mapped.emplace_back(relabel[e.u], relabel[e.v]);
    const Graph h = Graph::from_edges(n, std::move(mapped));
    CHECK(maximum_matching(g).size() == maximum_matching(h).size());
  }
}

TEST_CASE("planted instances have a perfect maximum matching") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = gen_random_planted(10, 0.3, seed);
    CHECK(validate_matching(inst.graph, inst.planted_opt).perfect);
    CHECK(maximum_matching(inst.graph).size() == 5);
  }
}
