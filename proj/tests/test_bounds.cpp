#include <doctest.h>

#include <cmath>

#include "ranklab/bounds.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/ranking.hpp"

using namespace ranklab;

namespace {

double to_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("binary entropy hits known values") {
  CHECK(binary_entropy(Rat(1, 2)) == 1);
  CHECK(binary_entropy(Rat(0)) == 0);
  CHECK(binary_entropy(Rat(1)) == 0);
  // H(1/4) = 2 - (3/4)log2(3) = 0.81127812...
  CHECK(std::abs(to_double(binary_entropy(Rat(1, 4))) - 0.8112781244591328) <
        1e-14);
  // Symmetry H(p) = H(1-p).
  CHECK(to_double(binary_entropy(Rat(3, 10)) - binary_entropy(Rat(7, 10))) ==
        doctest::Approx(0.0).epsilon(1e-30));
  CHECK_THROWS_AS(binary_entropy(Rat(-1, 10)), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(Rat(11, 10)), std::domain_error);
}

TEST_CASE("entropy bound on binomial coefficients") {
  // log2 C(n, alpha*n) <= n*H(alpha) for all valid alpha.
  for (int n = 2; n <= 30; ++n) {
    for (int a = 1; 2 * a <= n; ++a) {
      CHECK(binomial_entropy_check(n, Rat(a, n)));
    }
  }
  CHECK_THROWS_AS(binomial_entropy_check(10, Rat(1, 3)),  // alpha*n not integral
                  std::invalid_argument);
}

TEST_CASE("threshold function sign and root bracket") {
  const ThresholdReport at_low = threshold_report(Rat(1, 200), 30);
  CHECK(at_low.verdict == -1);
  // 12+ digit checkpoint computed independently with exact rationals + 50-digit
  // floats: f(1/200) = -0.006901329318663...
  CHECK(std::abs(to_double(at_low.f_of_c) - (-0.006901329318663091)) < 1e-13);

  const ThresholdReport at_high = threshold_report(Rat(3, 500), 30);
  CHECK(at_high.verdict == +1);
  CHECK(std::abs(to_double(at_high.f_of_c) - 0.023593589832078078) < 1e-13);

  // The bracket pins the sign change and is at most 2^-30 wide.
  CHECK(at_low.root_lo < at_low.root_hi);
  CHECK(at_low.root_hi - at_low.root_lo <= Rat(1, Int(1) << 30));
  CHECK(at_low.f_root_lo < 0);
  CHECK(at_low.f_root_hi > 0);
  CHECK(at_low.root_lo > Rat(1, 200));
  CHECK(at_low.root_hi < Rat(3, 500));

  CHECK_THROWS_AS(threshold_report(Rat(1, 200), 0), std::invalid_argument);
  CHECK_THROWS_AS(threshold_report(Rat(1, 200), 101), std::invalid_argument);
  CHECK_THROWS_AS(threshold_function(Rat(1, 2)), std::invalid_argument);
}

TEST_CASE("balanced composition minimizes the binomial sum") {
  // total=4 into 2 parts, x=2: balanced (2,2) gives C(2,2)+C(2,2)=2.
  CHECK(balanced_composition_value(4, 2, 2) == 2);
  // total=5 into 2 parts, x=2: (3,2) gives C(3,2)+C(2,2)=4.
  CHECK(balanced_composition_value(5, 2, 2) == 4);
  CHECK(composition_sum({3, 2}, 2) == 4);
  CHECK(composition_sum({4, 1}, 2) == 6);
  CHECK(composition_sum({5, 0}, 2) == 10);

  // Exhaustive + randomized confirmation over small grids.
  for (int total = 0; total <= 12; ++total) {
    for (int parts = 1; parts <= 4; ++parts) {
      for (int x = 1; x <= 3; ++x) {
        CHECK(balanced_binomial_min_check(total, parts, x, 50, 2026));
      }
    }
  }
}

TEST_CASE("expectation chain on the gadget instance") {
  const Instance gadget = gen_gadget_chain(1);
  const ExhaustiveStats stats =
      exhaustive_stats(gadget.graph, gadget.planted_opt, {1});

  // c = 0 forces k = n/4 = 1; the mean ratio 7/8 exceeds 1/2, so the chain
  // certifies nothing but must stay below the true expectation.
  const ExpectationChainReport chain = kwis_expectation_chain(stats, Rat(0));
  CHECK(chain.k == 1);
  CHECK(chain.s == 6);
  CHECK(chain.mean_ratio == Rat(7, 8));
  CHECK_FALSE(chain.ratio_at_most_half_plus_c);
  CHECK(chain.expected_kwis == Rat(1, 4));
  CHECK(chain.chain_expectation == Rat(6, 24));
  CHECK(chain.chain_le_expected);
  CHECK(chain.pass);

  // Non-integral k is rejected with replication guidance.
  CHECK_THROWS_WITH_AS(
      kwis_expectation_chain(stats, Rat(1, 5)),
      doctest::Contains("replicate the instance into 2b disjoint copies"),
      std::invalid_argument);
}

TEST_CASE("chain inequality holds across a planted corpus") {
  // For every instance with a perfect OPT and integral k = n/4 (c = 0), the
  // balanced-composition chain value must lower-bound the true expectation.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Instance inst = gen_random_planted(8, 0.3, seed);
    const ExhaustiveStats stats =
        exhaustive_stats(inst.graph, inst.planted_opt, {2});
    const ExpectationChainReport chain = kwis_expectation_chain(stats, Rat(0));
    CHECK(chain.chain_le_expected);
    CHECK(chain.pass);
  }
}

TEST_CASE("expected kwis upper bound in exact and log form") {
  // n=8, k=2: C(4,4)*(3/4)^2 = 9/16.
  CHECK(kwis_expected_upper_bound(8, 2) == Rat(9, 16));
  // n=40, k=9: C(20,18)*(3/4)^9 = 190*19683/262144 = 1869885/131072.
  const Rat big = kwis_expected_upper_bound(40, 9);
  CHECK(big == Rat(1869885, 131072));
  CHECK(big > 1);  // the bound certifies nothing at this size
  const double log_form = kwis_expected_upper_bound_log2(40, 9).convert_to<double>();
  CHECK(std::abs(log_form - std::log2(1869885.0 / 131072.0)) < 1e-12);

  // Replicating to n=400 (k=97 from the same c) drives the bound below one.
  const Rat small = kwis_expected_upper_bound(400, 97);
  CHECK(small < 1);
  CHECK(kwis_expected_upper_bound_log2(400, 97) < 0);
}

TEST_CASE("rational serialization round trips") {
  CHECK(rational_string(Rat(7, 8)) == "7/8");
  CHECK(parse_rational("7/8") == Rat(7, 8));
  CHECK(parse_rational("0.005") == Rat(1, 200));
  CHECK(parse_rational("3") == Rat(3));
  CHECK_THROWS_AS(parse_rational("7/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}
