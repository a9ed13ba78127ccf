#include "ranklab/bounds.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ranklab/rng.hpp"

namespace ranklab {

namespace {

const Real& ln2() {
  static const Real value = log(Real(2));
  return value;
}

Real log2_real(const Real& x) { return log(x) / ln2(); }

// Generalized binomial coefficient with a rational top argument:
// C(t, k) = t * (t-1) * ... * (t-k+1) / k!.
Rat generalized_binomial(const Rat& t, unsigned long k) {
  Rat product(1);
  for (unsigned long j = 0; j < k; ++j) {
    product *= t - Rat(static_cast<long>(j));
  }
  return product / Rat(factorial(static_cast<unsigned>(k)));
}

// Draws a uniformly random weak composition of total into parts pieces via
// bar positions among total + parts - 1 slots.
std::vector<int> random_composition(int total, int parts, Rng& rng,
                                    std::vector<int>& pool) {
  if (parts == 1) return {total};
  const int slots = total + parts - 1;
  pool.resize(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) pool[static_cast<std::size_t>(i)] = i;
  const int bars = parts - 1;
  for (int i = 0; i < bars; ++i) {
    const int j =
        i + static_cast<int>(rng.below(static_cast<std::uint64_t>(slots - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<int> chosen(pool.begin(), pool.begin() + bars);
  std::sort(chosen.begin(), chosen.end());
  std::vector<int> composition(static_cast<std::size_t>(parts));
  int previous = -1;
  for (int i = 0; i < bars; ++i) {
    composition[static_cast<std::size_t>(i)] = chosen[static_cast<std::size_t>(i)] - previous - 1;
    previous = chosen[static_cast<std::size_t>(i)];
  }
  composition[static_cast<std::size_t>(bars)] = slots - 1 - previous;
  return composition;
}

}  // namespace

Real binary_entropy(const Real& x) {
  if (x < 0 || x > 1) {
    throw std::domain_error("entropy argument must lie in [0, 1]");
  }
  if (x == 0 || x == 1) return Real(0);
  const Real complement = Real(1) - x;
  return -x * log2_real(x) - complement * log2_real(complement);
}

Real binary_entropy(const Rat& x) { return binary_entropy(Real(x)); }

Real log2_rat(const Rat& value) {
  if (value <= 0) throw std::domain_error("log2 needs a positive argument");
  const Real num(boost::multiprecision::numerator(value));
  const Real den(boost::multiprecision::denominator(value));
  return (log(num) - log(den)) / ln2();
}

bool binomial_entropy_check(int n, const Rat& alpha) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (alpha < Rat(1, n) || alpha > Rat(1, 2)) {
    throw std::invalid_argument("need 1/n <= alpha <= 1/2");
  }
  const Rat scaled = alpha * n;
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw std::invalid_argument("alpha * n must be an integer, got " +
                                rational_string(scaled));
  }
  const Int k = boost::multiprecision::numerator(scaled);
  const Real lhs = log2_rat(Rat(binomial(Int(n), k)));
  const Real rhs = Real(n) * binary_entropy(alpha);
  // The inequality is strict with margin over the whole domain; the guard
  // absorbs Real rounding so a pass certifies the true inequality.
  static const Real guard("1e-30");
  return lhs <= rhs - guard;
}

Int balanced_composition_value(const Int& total, const Int& parts, const Int& x) {
  if (parts < 1) throw std::invalid_argument("need at least one part");
  if (total < 0) throw std::invalid_argument("total must be nonnegative");
  const Int q = total / parts;
  const Int r = total % parts;
  return r * binomial(q + 1, x) + (parts - r) * binomial(q, x);
}

Int composition_sum(const std::vector<int>& parts, int x) {
  Int sum = 0;
  for (int a : parts) sum += binomial(static_cast<long>(a), static_cast<long>(x));
  return sum;
}

bool balanced_binomial_min_check(int total, int parts, int x,
                                 std::uint64_t trials, std::uint64_t seed,
                                 std::uint64_t exhaustive_limit) {
  if (total < 0 || parts < 1 || x < 0) {
    throw std::invalid_argument("composition check needs total >= 0, parts >= 1, x >= 0");
  }
  const Int balanced = balanced_composition_value(total, parts, x);

  // The fully skewed composition is the classic worst case; check it always.
  {
    std::vector<int> skew(static_cast<std::size_t>(parts), 0);
    skew[0] = total;
    if (composition_sum(skew, x) < balanced) return false;
  }

  // C(a, x) table for a <= total keeps the exhaustive walk cheap.
  std::vector<Int> choose_x(static_cast<std::size_t>(total) + 1);
  for (int a = 0; a <= total; ++a) {
    choose_x[static_cast<std::size_t>(a)] =
        binomial(static_cast<long>(a), static_cast<long>(x));
  }

  const Int composition_count =
      binomial(static_cast<long>(total + parts - 1), static_cast<long>(parts - 1));
  if (composition_count <= Int(exhaustive_limit)) {
    auto walk = [&](auto&& self, int index, int remaining, Int acc) -> bool {
      if (index == parts - 1) {
        acc += choose_x[static_cast<std::size_t>(remaining)];
        return acc >= balanced;
      }
      for (int v = 0; v <= remaining; ++v) {
        if (!self(self, index + 1, remaining - v,
                  acc + choose_x[static_cast<std::size_t>(v)])) {
          return false;
        }
      }
      return true;
    };
    if (!walk(walk, 0, total, Int(0))) return false;
  }

  Rng rng(seed);
  std::vector<int> pool;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::vector<int> sample = random_composition(total, parts, rng, pool);
    if (composition_sum(sample, x) < balanced) return false;
  }
  return true;
}

ExpectationChainReport kwis_expectation_chain(int n, int mu, const Int& runs,
                                              const Int& sum_sizes,
                                              const std::map<int, Int>& aug3_histogram,
                                              const Rat& c) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (runs < 1) throw std::invalid_argument("need at least one tallied run");
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  if (2 * mu != n) {
    throw std::invalid_argument(
        "the counting chain needs a perfect maximum matching (2*mu = n)");
  }
  Int tallied = 0;
  for (const auto& [a, count] : aug3_histogram) {
    if (a < 0 || count < 0) throw std::invalid_argument("malformed histogram");
    tallied += count;
  }
  if (tallied != runs) {
    throw std::invalid_argument("histogram counts must sum to the run count");
  }

  const Rat k_rat = (Rat(1, 2) - Rat(3) * c) * Rat(n, 2);
  if (boost::multiprecision::denominator(k_rat) != 1) {
    throw std::invalid_argument(
        "k = (1/2 - 3c) * n/2 = " + rational_string(k_rat) +
        " is not an integer; replicate the instance into 2b disjoint copies "
        "until c * n/2 is integral");
  }
  const Int k = boost::multiprecision::numerator(k_rat);
  if (k < 0) {
    throw std::invalid_argument("c is too large: k = (1/2 - 3c) * n/2 < 0");
  }
  const unsigned long k_small = k.convert_to<unsigned long>();
  if (k_small > 1000000ul) {
    throw std::invalid_argument("k is unreasonably large for the chain");
  }

  ExpectationChainReport report;
  report.n = n;
  report.mu = mu;
  report.c = c;
  report.k = k;
  report.runs = runs;
  report.sum_sizes = sum_sizes;
  for (const auto& [a, count] : aug3_histogram) {
    report.s += Int(a) * count;
  }
  report.mean_ratio = mu == 0 ? Rat(1) : Rat(sum_sizes, runs * mu);
  report.ratio_at_most_half_plus_c = report.mean_ratio <= Rat(1, 2) + c;
  report.s_required = Rat(runs) * k_rat;
  report.s_meets_requirement = Rat(report.s) >= report.s_required;
  report.chain_expectation =
      Rat(balanced_composition_value(report.s, runs, k), runs);
  report.jensen_expectation = generalized_binomial(Rat(report.s, runs), k_small);
  Int exact = 0;
  for (const auto& [a, count] : aug3_histogram) {
    exact += count * binomial(Int(a), k);
  }
  report.expected_kwis = Rat(exact, runs);
  report.chain_le_expected = report.chain_expectation <= report.expected_kwis;
  report.certifies_expectation_ge_one = report.chain_expectation >= 1;
  report.pass = report.chain_le_expected &&
                (!report.ratio_at_most_half_plus_c ||
                 (report.s_meets_requirement &&
                  report.certifies_expectation_ge_one));
  return report;
}

ExpectationChainReport kwis_expectation_chain(const ExhaustiveStats& stats,
                                              const Rat& c) {
  return kwis_expectation_chain(stats.n, stats.mu, stats.n_factorial,
                                stats.sum_sizes, stats.aug3_histogram, c);
}

Real threshold_function(const Rat& c) {
  if (c <= 0 || c >= Rat(1, 6)) {
    throw std::invalid_argument("need 0 < c < 1/6, got " + rational_string(c));
  }
  const Real entropy_term = binary_entropy(Rat(6) * c);
  const Real log2_three_quarters = (log(Real(3)) - log(Real(4))) / ln2();
  return entropy_term + log2_three_quarters * Real(Rat(1, 2) - Rat(3) * c);
}

ThresholdReport threshold_report(const Rat& c, int precision_bits) {
  if (precision_bits < 1 || precision_bits > 100) {
    throw std::invalid_argument(
        "precision_bits must lie in [1, 100]; the configured float width "
        "certifies no more");
  }
  ThresholdReport report;
  report.c = c;
  report.precision_bits = precision_bits;
  report.f_of_c = threshold_function(c);
  static const Real sign_guard("1e-40");
  if (report.f_of_c > sign_guard) {
    report.verdict = 1;
  } else if (report.f_of_c < -sign_guard) {
    report.verdict = -1;
  } else {
    report.verdict = 0;
  }

  Rat lo(1, 1000);
  Rat hi(1, 100);
  Real f_lo = threshold_function(lo);
  Real f_hi = threshold_function(hi);
  if (!(f_lo < 0) || !(f_hi > 0)) {
    throw std::logic_error("threshold function lost its sign change on (1/1000, 1/100)");
  }
  const Rat width_target = Rat(1, Int(1) << precision_bits);
  while (hi - lo > width_target) {
    const Rat mid = (lo + hi) / 2;
    const Real f_mid = threshold_function(mid);
    if (f_mid < 0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  report.root_lo = lo;
  report.root_hi = hi;
  report.f_root_lo = f_lo;
  report.f_root_hi = f_hi;
  return report;
}

Rat kwis_expected_upper_bound(int n, int k) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("n must be even, got " + std::to_string(n));
  }
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (2 * k > n / 2) {
    throw std::invalid_argument("need 2k <= n/2, got k=" + std::to_string(k) +
                                " with n=" + std::to_string(n));
  }
  return Rat(binomial(static_cast<long>(n / 2), static_cast<long>(2 * k))) *
         Rat(boost::multiprecision::pow(Int(3), static_cast<unsigned>(k)),
             boost::multiprecision::pow(Int(4), static_cast<unsigned>(k)));
}

Real kwis_expected_upper_bound_log2(int n, int k) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("n must be even, got " + std::to_string(n));
  }
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (2 * k > n / 2) {
    throw std::invalid_argument("need 2k <= n/2, got k=" + std::to_string(k) +
                                " with n=" + std::to_string(n));
  }
  const int top = n / 2;
  const int pick = 2 * k;
  Real log2_binomial(0);
  for (int i = 1; i <= pick; ++i) {
    log2_binomial += log2_real(Real(top - pick + i)) - log2_real(Real(i));
  }
  const Real log2_three_quarters = (log(Real(3)) - log(Real(4))) / ln2();
  return log2_binomial + Real(k) * log2_three_quarters;
}

}  // namespace ranklab
