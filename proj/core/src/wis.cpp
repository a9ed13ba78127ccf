#include "ranklab/wis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

#include "ranklab/blossom.hpp"
#include "ranklab/ranking.hpp"
#include "ranklab/rng.hpp"

namespace ranklab {

namespace {

// Sorts and validates a query vertex set: in range, duplicate-free, even.
std::vector<int> checked_set(const Graph& g, std::vector<int> I) {
  std::sort(I.begin(), I.end());
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (I[i] < 0 || I[i] >= g.n()) {
      throw std::invalid_argument("query vertex " + std::to_string(I[i]) +
                                  " is out of range");
    }
    if (i > 0 && I[i] == I[i - 1]) {
      throw std::invalid_argument("query vertex " + std::to_string(I[i]) +
                                  " appears twice");
    }
  }
  if (I.size() % 2 != 0) {
    throw std::invalid_argument("query set must have even size, got " +
                                std::to_string(I.size()));
  }
  return I;
}

void require_perfect_opt(const Graph& g, const Matching& opt) {
  const MatchingFlags flags = validate_matching(g, opt);
  if (!flags.valid || !flags.perfect) {
    throw std::invalid_argument("opt must be a perfect matching in g");
  }
}

// Per-permutation test that I is exactly the endpoint set of |I|/2
// length-three augmenting paths, given a run's mate array. Each v in I is
// walked through its OPT edge, the middle edge, and the opposite OPT edge;
// the walk is symmetric, so visiting every v checks both sides of every
// path and forces the pairing to stay inside I.
bool endpoint_set_hit(const std::vector<int>& I, const std::vector<char>& in_I,
                      const std::vector<int>& mate,
                      const std::vector<int>& opt_mate) {
  for (int v : I) {
    if (mate[static_cast<std::size_t>(v)] != -1) return false;
    const int b = opt_mate[static_cast<std::size_t>(v)];
    const int c = mate[static_cast<std::size_t>(b)];
    if (c == -1) return false;
    const int d = opt_mate[static_cast<std::size_t>(c)];
    if (!in_I[static_cast<std::size_t>(d)]) return false;
  }
  return true;
}

// Walks the hit set's paths once (via the smaller endpoint) and counts the
// counterpart-order checks: for a path (v, b, c, d) the middle vertex b must
// precede d and the middle vertex c must precede v.
template <class Counter>
void check_counterpart_order(const std::vector<int>& I,
                             const std::vector<int>& mate,
                             const std::vector<int>& opt_mate,
                             const std::vector<int>& position,
                             Counter& checked, Counter& violations) {
  for (int v : I) {
    const int b = opt_mate[static_cast<std::size_t>(v)];
    const int c = mate[static_cast<std::size_t>(b)];
    const int d = opt_mate[static_cast<std::size_t>(c)];
    if (d < v) continue;  // the path is handled from its smaller endpoint
    checked += 2;
    if (position[static_cast<std::size_t>(b)] >=
        position[static_cast<std::size_t>(d)]) {
      ++violations;
    }
    if (position[static_cast<std::size_t>(c)] >=
        position[static_cast<std::size_t>(v)]) {
      ++violations;
    }
  }
}

struct ProbabilityWorker {
  const Graph* g = nullptr;
  const std::vector<int>* opt_mate = nullptr;
  const std::vector<int>* I = nullptr;
  const std::vector<char>* in_I = nullptr;
  std::uint64_t hits = 0;
  std::uint64_t counterpart_checked = 0;
  std::uint64_t counterpart_violations = 0;
  std::vector<int> mate;

  void visit(const std::vector<int>& order, const std::vector<int>& position) {
    ranking_fill(*g, order, position, mate);
    if (endpoint_set_hit(*I, *in_I, mate, *opt_mate)) {
      ++hits;
      check_counterpart_order(*I, mate, *opt_mate, position,
                              counterpart_checked, counterpart_violations);
    }
  }
};

}  // namespace

std::optional<WisCertificate> is_kwis(const Graph& g, const Matching& r,
                                      const Matching& opt, std::vector<int> I) {
  require_perfect_opt(g, opt);
  const MatchingFlags r_flags = validate_matching(g, r);
  if (!r_flags.valid || !r_flags.maximal) {
    throw std::invalid_argument("r must be a valid maximal matching in g");
  }
  I = checked_set(g, std::move(I));

  const AugDecomposition decomposition = symmetric_difference(r, opt, g);
  std::vector<char> in_I(static_cast<std::size_t>(g.n()), 0);
  for (int v : I) in_I[static_cast<std::size_t>(v)] = 1;

  WisCertificate cert;
  cert.vertices = std::move(I);
  for (const Aug3Path& p : decomposition.aug3) {
    const bool a_in = in_I[static_cast<std::size_t>(p.a)] != 0;
    const bool d_in = in_I[static_cast<std::size_t>(p.d)] != 0;
    if (a_in != d_in) return std::nullopt;  // path straddles the set boundary
    if (a_in) cert.paths.push_back(p);
  }
  // Paths are vertex-disjoint, so 2 * |paths| endpoints inside the set cover
  // it exactly iff the counts agree.
  if (cert.paths.size() * 2 != cert.vertices.size()) return std::nullopt;
  for (const Aug3Path& p : cert.paths) {
    cert.counterpart.emplace_back(p.b, p.d);
    cert.counterpart.emplace_back(p.c, p.a);
  }
  std::sort(cert.counterpart.begin(), cert.counterpart.end());
  return cert;
}

Int count_kwis(const Matching& r, const Matching& opt, const Graph& g, int k) {
  const AugDecomposition decomposition = symmetric_difference(r, opt, g);
  return binomial(static_cast<long>(decomposition.aug3.size()),
                  static_cast<long>(k));
}

Aug3BoundReport verify_aug3_lower_bound(const Graph& g, const Matching& m,
                                        const Matching& opt) {
  const MatchingFlags m_flags = validate_matching(g, m);
  if (!m_flags.valid || !m_flags.maximal) {
    throw std::invalid_argument("m must be a valid maximal matching in g");
  }
  if (!validate_matching(g, opt).valid) {
    throw std::invalid_argument("opt is not a valid matching in g");
  }
  const int mu = maximum_matching(g).size();
  if (opt.size() != mu) {
    throw std::invalid_argument(
        "opt must be a maximum matching: |opt| = " + std::to_string(opt.size()) +
        " but mu(G) = " + std::to_string(mu));
  }

  Aug3BoundReport report;
  report.matching_size = m.size();
  report.mu = mu;
  report.alpha = mu == 0 ? Rat(0) : Rat(m.size(), mu) - Rat(1, 2);
  report.aug3_count =
      static_cast<int>(symmetric_difference(m, opt, g).aug3.size());
  report.bound = Rat(2 * mu - 3 * m.size());
  report.pass = Rat(report.aug3_count) >= report.bound;
  return report;
}

bool verify_counterpart_order(const WisCertificate& cert, const Permutation& p) {
  for (const auto& [v, counterpart] : cert.counterpart) {
    if (p.position(v) >= p.position(counterpart)) return false;
  }
  return true;
}

SetProbabilityReport kwis_set_report(const Graph& g, const Matching& opt,
                                     const std::vector<int>& I, int threads,
                                     int cap) {
  const int n = g.n();
  if (n > cap) {
    throw CapExceeded("exact probability needs the full n! sweep and n=" +
                      std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap) +
                      " — raise it explicitly to force the sweep");
  }
  require_perfect_opt(g, opt);
  const std::vector<int> query = checked_set(g, I);
  std::vector<char> in_query(static_cast<std::size_t>(n), 0);
  for (int v : query) in_query[static_cast<std::size_t>(v)] = 1;

  ProbabilityWorker prototype;
  prototype.g = &g;
  prototype.opt_mate = &opt.mates();
  prototype.I = &query;
  prototype.in_I = &in_query;

  const std::vector<ProbabilityWorker> workers =
      permutation_sweep(n, threads, prototype);

  SetProbabilityReport report;
  report.vertices = query;
  report.k = static_cast<int>(query.size()) / 2;
  report.total = factorial(static_cast<unsigned>(n));
  for (const ProbabilityWorker& w : workers) {
    report.hits += w.hits;
    report.counterpart_checked += w.counterpart_checked;
    report.counterpart_violations += w.counterpart_violations;
  }
  report.probability = Rat(report.hits, report.total);
  report.bound = Rat(1, boost::multiprecision::pow(
                            Int(4), static_cast<unsigned>(report.k)));
  report.bound_holds = report.probability <= report.bound;
  return report;
}

Rat kwis_probability_exhaustive(const Graph& g, const Matching& opt,
                                const std::vector<int>& I, int threads,
                                int cap) {
  return kwis_set_report(g, opt, I, threads, cap).probability;
}

ProbabilityEstimate kwis_probability_montecarlo(const Graph& g,
                                                const Matching& opt,
                                                const std::vector<int>& I,
                                                std::uint64_t samples,
                                                std::uint64_t seed,
                                                int threads) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  require_perfect_opt(g, opt);
  const std::vector<int> query = checked_set(g, I);
  const int n = g.n();
  std::vector<char> in_query(static_cast<std::size_t>(n), 0);
  for (int v : query) in_query[static_cast<std::size_t>(v)] = 1;
  const std::vector<int>& opt_mate = opt.mates();

  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  int t = resolve_threads(threads);
  if (static_cast<std::uint64_t>(t) > chunks) t = static_cast<int>(chunks);

  struct HitTally {
    std::uint64_t hits = 0;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
  };
  std::vector<HitTally> tallies(static_cast<std::size_t>(t));
  std::atomic<std::uint64_t> next{0};
  auto body = [&](HitTally& tally) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::vector<int> position(static_cast<std::size_t>(n));
    std::vector<int> mate;
    for (;;) {
      const std::uint64_t j = next.fetch_add(1);
      if (j >= chunks) break;
      Rng rng = Rng::stream(seed, j);
      const std::uint64_t lo = j * kChunk;
      const std::uint64_t hi = std::min(samples, lo + kChunk);
      for (std::uint64_t s = lo; s < hi; ++s) {
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        for (int i = 0; i < n; ++i) {
          position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
        }
        ranking_fill(g, order, position, mate);
        if (endpoint_set_hit(query, in_query, mate, opt_mate)) {
          ++tally.hits;
          check_counterpart_order(query, mate, opt_mate, position,
                                  tally.checked, tally.violations);
        }
      }
    }
  };
  if (t <= 1) {
    body(tallies[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
      pool.emplace_back(body, std::ref(tallies[static_cast<std::size_t>(i)]));
    }
    for (auto& th : pool) th.join();
  }

  ProbabilityEstimate est;
  est.samples = samples;
  for (const HitTally& tally : tallies) {
    est.hits += tally.hits;
    est.counterpart_checked += tally.checked;
    est.counterpart_violations += tally.violations;
  }
  const double count = static_cast<double>(samples);
  const double p = static_cast<double>(est.hits) / count;
  est.point = p;
  const double z = 1.96;
  const double denom = 1.0 + z * z / count;
  const double center = (p + z * z / (2.0 * count)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / count + z * z / (4.0 * count * count)) /
      denom;
  est.wilson_lo = std::max(0.0, center - half);
  est.wilson_hi = std::min(1.0, center + half);
  return est;
}

Int kwis_count_upper_bound(int n, int k) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("n must be even, got " + std::to_string(n));
  }
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (2 * k > n / 2) {
    throw std::invalid_argument("need 2k <= n/2, got k=" + std::to_string(k) +
                                " with n=" + std::to_string(n));
  }
  return binomial(static_cast<long>(n / 2), static_cast<long>(2 * k)) *
         boost::multiprecision::pow(Int(3), static_cast<unsigned>(k));
}

std::vector<std::vector<int>> independent_sets_of_size(const Graph& g,
                                                       int size) {
  if (size < 0) throw std::invalid_argument("size must be nonnegative");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto extend = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == size) {
      out.push_back(current);
      return;
    }
    const int needed = size - static_cast<int>(current.size());
    for (int v = start; v + needed <= g.n(); ++v) {
      bool independent = true;
      for (int u : current) {
        if (g.has_edge(u, v)) {
          independent = false;
          break;
        }
      }
      if (!independent) continue;
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

}  // namespace ranklab
