#pragma once

// Analytic toolkit behind the wasteful-set analysis: binary entropy and the
// entropy bound on binomial coefficients, balanced-composition minimization
// of sum C(a_i, x), the exact counting chain over exhaustive sweep tallies,
// and the threshold function f(c) = H(6c) + log2(3/4) * (1/2 - 3c) whose
// sign decides how far below 1/2 + c the expected ratio can sit.
//
// Two numeric regimes: combinatorial inequalities are compared in exact
// Int/Rat; entropy and log expressions use Real with padding so a pass is
// conservative.

#include <cstdint>
#include <map>
#include <vector>

#include "ranklab/bigmath.hpp"
#include "ranklab/ranking.hpp"

namespace ranklab {

// H(x) = -x*log2(x) - (1-x)*log2(1-x); H(0) = H(1) = 0 by limit.
// Throws std::domain_error outside [0, 1].
Real binary_entropy(const Real& x);
Real binary_entropy(const Rat& x);

// log2 of a positive rational; throws std::domain_error otherwise.
Real log2_rat(const Rat& value);

// Verifies C(n, alpha*n) <= 2^(n*H(alpha)) with the exact binomial on the
// left and high-precision entropy on the right, padded so a pass is
// conservative. Requires alpha*n integral and 1/n <= alpha <= 1/2; throws
// std::invalid_argument otherwise.
bool binomial_entropy_check(int n, const Rat& alpha);

// Sum of C(a_i, x) over the balanced split of total into parts pieces
// (every part is floor(total/parts) or ceil(total/parts)).
Int balanced_composition_value(const Int& total, const Int& parts, const Int& x);

// Sum of C(a_i, x) for an explicit composition.
Int composition_sum(const std::vector<int>& parts, int x);

// Checks that the balanced split minimizes sum C(a_i, x) over compositions
// of total into parts nonnegative pieces: against every composition when
// there are at most exhaustive_limit of them, and always against the fully
// skewed composition plus `trials` seeded random ones.
bool balanced_binomial_min_check(int total, int parts, int x,
                                 std::uint64_t trials, std::uint64_t seed,
                                 std::uint64_t exhaustive_limit = 2000000);

// Exact counting chain over exhaustive sweep tallies. With k =
// (1/2 - 3c) * n/2, the balanced-composition minimum of sum C(a_i, k)
// lower-bounds the expected number of k-WIS; whenever the sweep's mean
// ratio is at most 1/2 + c, the per-run aug3 bound forces s >= runs * k and
// the chain must certify an expectation of at least 1.
struct ExpectationChainReport {
  int n = 0;
  int mu = 0;
  Rat c;
  Int k;          // (1/2 - 3c) * n/2, integral by precondition
  Int runs;       // permutations tallied (n!)
  Int s;          // total aug3 count over all runs
  Int sum_sizes;  // total matching size over all runs
  Rat mean_ratio;
  bool ratio_at_most_half_plus_c = false;  // the obligation trigger
  Rat s_required;                          // runs * (n/4 - 3nc/2) = runs * k
  bool s_meets_requirement = false;
  Rat chain_expectation;   // balanced minimum of sum C(a_i, k) / runs
  Rat jensen_expectation;  // generalized C(s/runs, k), rational
  Rat expected_kwis;       // exact sum C(a_i, k) / runs from the tallies
  bool chain_le_expected = false;  // the minimum never exceeds the actual
  bool certifies_expectation_ge_one = false;  // chain_expectation >= 1
  bool pass = false;
};

// Throws std::invalid_argument when k is not an integer (with guidance to
// replicate the instance until c*n/2 is integral), when c is negative or
// so large that k < 0, or when the histogram counts do not sum to runs.
ExpectationChainReport kwis_expectation_chain(int n, int mu, const Int& runs,
                                              const Int& sum_sizes,
                                              const std::map<int, Int>& aug3_histogram,
                                              const Rat& c);
ExpectationChainReport kwis_expectation_chain(const ExhaustiveStats& stats,
                                              const Rat& c);

struct ThresholdReport {
  Rat c;
  Real f_of_c;
  int verdict = 0;  // sign of f(c): -1, 0, +1
  Rat root_lo;      // bracket with f(root_lo) < 0 < f(root_hi)
  Rat root_hi;
  Real f_root_lo;
  Real f_root_hi;
  int precision_bits = 0;
};

// f(c) = H(6c) + log2(3/4) * (1/2 - 3c). Requires 0 < c < 1/6.
Real threshold_function(const Rat& c);

// Evaluates f at c and bisects for its unique root on (1/1000, 1/100) until
// the bracket is narrower than 2^-precision_bits. Throws
// std::invalid_argument for c outside (0, 1/6) or precision_bits outside
// [1, 100] (the configured float width certifies no more).
ThresholdReport threshold_report(const Rat& c, int precision_bits);

// Exact rational C(n/2, 2k) * (3/4)^k, the bound on the expected number of
// k-WIS. Throws on odd n, negative k, or 2k > n/2.
Rat kwis_expected_upper_bound(int n, int k);

// The same quantity evaluated purely in the log2 domain (term-by-term log
// sums, no big integers); cross-checks the exact value.
Real kwis_expected_upper_bound_log2(int n, int k);

}  // namespace ranklab
