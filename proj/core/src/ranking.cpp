#include "ranklab/ranking.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ranklab/blossom.hpp"

namespace ranklab {

int ranking_fill(const Graph& g, const std::vector<int>& order,
                 const std::vector<int>& position, std::vector<int>& mate) {
  const int n = g.n();
  mate.assign(static_cast<std::size_t>(n), -1);
  int size = 0;
  for (int r = 0; r < n; ++r) {
    const int v = order[static_cast<std::size_t>(r)];
    if (mate[static_cast<std::size_t>(v)] != -1) continue;
    int best = -1;
    for (int u : g.neighbors(v)) {
      if (mate[static_cast<std::size_t>(u)] == -1 &&
          (best == -1 || position[static_cast<std::size_t>(u)] <
                             position[static_cast<std::size_t>(best)])) {
        best = u;
      }
    }
    if (best != -1) {
      mate[static_cast<std::size_t>(v)] = best;
      mate[static_cast<std::size_t>(best)] = v;
      ++size;
    }
  }
  return size;
}

namespace {

// Emits the length-three augmenting paths of mate (+) opt_mate in canonical
// orientation (smaller endpoint first). An R-edge {v,w} is a middle edge iff
// the opt-mates of v and w exist, differ from the edge's own endpoints, and
// are both unmatched.
void collect_aug3(const std::vector<int>& mate, const std::vector<int>& opt_mate,
                  std::vector<Aug3Path>& out) {
  out.clear();
  const int n = static_cast<int>(mate.size());
  for (int v = 0; v < n; ++v) {
    const int w = mate[static_cast<std::size_t>(v)];
    if (w <= v) continue;  // visit each R-edge once; also skips unmatched (-1)
    const int a = opt_mate[static_cast<std::size_t>(v)];
    const int d = opt_mate[static_cast<std::size_t>(w)];
    if (a == -1 || d == -1 || a == w) continue;  // a == w means {v,w} is an OPT edge
    if (mate[static_cast<std::size_t>(a)] != -1 ||
        mate[static_cast<std::size_t>(d)] != -1) {
      continue;
    }
    if (a < d) {
      out.push_back(Aug3Path{a, v, w, d});
    } else {
      out.push_back(Aug3Path{d, w, v, a});
    }
  }
}

struct SweepWorker {
  const Graph* g = nullptr;
  const std::vector<int>* opt_mate = nullptr;
  int mu = 0;
  std::vector<int> ks;
  bool collect = false;

  std::vector<std::uint64_t> size_hist;
  std::vector<std::uint64_t> aug3_hist;
  std::uint64_t sum_sizes = 0;
  std::uint64_t sum_aug3 = 0;
  std::uint64_t aug3_bound_violations = 0;
  std::uint64_t counterpart_violations = 0;
  std::map<int, std::map<std::vector<int>, std::uint64_t>> occurrences;

  // scratch
  std::vector<int> mate;
  std::vector<Aug3Path> paths;
  std::vector<int> subset;
  std::vector<int> endpoint_set;

  void visit(const std::vector<int>& order, const std::vector<int>& position) {
    const int size = ranking_fill(*g, order, position, mate);
    collect_aug3(mate, *opt_mate, paths);
    const int a = static_cast<int>(paths.size());
    ++size_hist[static_cast<std::size_t>(size)];
    ++aug3_hist[static_cast<std::size_t>(a)];
    sum_sizes += static_cast<std::uint64_t>(size);
    sum_aug3 += static_cast<std::uint64_t>(a);
    if (a < 2 * mu - 3 * size) ++aug3_bound_violations;
    for (const Aug3Path& p : paths) {
      if (position[static_cast<std::size_t>(p.b)] >=
          position[static_cast<std::size_t>(p.d)]) {
        ++counterpart_violations;
      }
      if (position[static_cast<std::size_t>(p.c)] >=
          position[static_cast<std::size_t>(p.a)]) {
        ++counterpart_violations;
      }
    }
    if (collect) record_sets(a);
  }

  // Every k-subset of this permutation's aug3 paths contributes its sorted
  // endpoint set once.
  void record_sets(int a) {
    for (int k : ks) {
      if (k < 1 || k > a) continue;
      auto& bucket = occurrences[k];
      subset.resize(static_cast<std::size_t>(k));
      std::iota(subset.begin(), subset.end(), 0);
      while (true) {
        endpoint_set.clear();
        for (int idx : subset) {
          endpoint_set.push_back(paths[static_cast<std::size_t>(idx)].a);
          endpoint_set.push_back(paths[static_cast<std::size_t>(idx)].d);
        }
        std::sort(endpoint_set.begin(), endpoint_set.end());
        ++bucket[endpoint_set];
        int i = k - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == a - k + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
          subset[static_cast<std::size_t>(j)] =
              subset[static_cast<std::size_t>(j - 1)] + 1;
        }
      }
    }
  }
};

struct McTallies {
  std::vector<std::uint64_t> size_hist;
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;

  explicit McTallies(int n) : size_hist(static_cast<std::size_t>(n / 2 + 1), 0) {}

  void add(int size) {
    ++size_hist[static_cast<std::size_t>(size)];
    sum += static_cast<std::uint64_t>(size);
    sum_sq += static_cast<std::uint64_t>(size) * static_cast<std::uint64_t>(size);
  }
};

int one_sample(const Graph& g, GreedyKind kind, Rng& rng,
               std::vector<int>& order, std::vector<int>& position,
               std::vector<int>& mate, std::vector<int>& pool) {
  const int n = g.n();
  switch (kind) {
    case GreedyKind::kRanking: {
      order.resize(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      position.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
      }
      return ranking_fill(g, order, position, mate);
    }
    case GreedyKind::kMrg: {
      order.resize(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      mate.assign(static_cast<std::size_t>(n), -1);
      int size = 0;
      for (int v : order) {
        if (mate[static_cast<std::size_t>(v)] != -1) continue;
        pool.clear();
        for (int u : g.neighbors(v)) {
          if (mate[static_cast<std::size_t>(u)] == -1) pool.push_back(u);
        }
        if (pool.empty()) continue;
        const int u = pool[static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(pool.size())))];
        mate[static_cast<std::size_t>(v)] = u;
        mate[static_cast<std::size_t>(u)] = v;
        ++size;
      }
      return size;
    }
    case GreedyKind::kEdgeGreedy: {
      const int m = g.m();
      order.resize(static_cast<std::size_t>(m));
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      mate.assign(static_cast<std::size_t>(n), -1);
      int size = 0;
      for (int idx : order) {
        const Edge& e = g.edges()[static_cast<std::size_t>(idx)];
        if (mate[static_cast<std::size_t>(e.u)] == -1 &&
            mate[static_cast<std::size_t>(e.v)] == -1) {
          mate[static_cast<std::size_t>(e.u)] = e.v;
          mate[static_cast<std::size_t>(e.v)] = e.u;
          ++size;
        }
      }
      return size;
    }
  }
  return 0;  // unreachable
}

}  // namespace

const char* greedy_kind_name(GreedyKind kind) {
  switch (kind) {
    case GreedyKind::kRanking:
      return "ranking";
    case GreedyKind::kMrg:
      return "mrg";
    case GreedyKind::kEdgeGreedy:
      return "edge-greedy";
  }
  return "unknown";
}

std::optional<GreedyKind> parse_greedy_kind(const std::string& name) {
  if (name == "ranking") return GreedyKind::kRanking;
  if (name == "mrg") return GreedyKind::kMrg;
  if (name == "edge-greedy") return GreedyKind::kEdgeGreedy;
  return std::nullopt;
}

Matching ranking_run(const Graph& g, const Permutation& pi) {
  if (pi.n() != g.n()) {
    throw std::invalid_argument("permutation covers " + std::to_string(pi.n()) +
                                " vertices, graph has " + std::to_string(g.n()));
  }
  std::vector<int> mate;
  ranking_fill(g, pi.order(), pi.positions(), mate);
  return Matching::from_mates(mate);
}

RunRecord sample_ranking(const Graph& g, Rng& rng) {
  Permutation pi = Permutation::random(g.n(), rng);
  Matching matching = ranking_run(g, pi);
  const int matched = 2 * matching.size();
  return RunRecord{std::move(pi), std::move(matching), matched};
}

RunRecord sample_ranking(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  return sample_ranking(g, rng);
}

RunRecord mrg_run(const Graph& g, Rng& rng) {
  const int n = g.n();
  Permutation pi = Permutation::random(n, rng);
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  std::vector<int> pool;
  for (int r = 0; r < n; ++r) {
    const int v = pi.at(r);
    if (mate[static_cast<std::size_t>(v)] != -1) continue;
    pool.clear();
    for (int u : g.neighbors(v)) {
      if (mate[static_cast<std::size_t>(u)] == -1) pool.push_back(u);
    }
    if (pool.empty()) continue;
    const int u = pool[static_cast<std::size_t>(
        rng.below(static_cast<std::uint64_t>(pool.size())))];
    mate[static_cast<std::size_t>(v)] = u;
    mate[static_cast<std::size_t>(u)] = v;
  }
  Matching matching = Matching::from_mates(mate);
  const int matched = 2 * matching.size();
  return RunRecord{std::move(pi), std::move(matching), matched};
}

RunRecord mrg_run(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  return mrg_run(g, rng);
}

RunRecord edge_greedy_run(const Graph& g, Rng& rng) {
  const int m = g.m();
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  std::vector<int> mate(static_cast<std::size_t>(g.n()), -1);
  for (int i : idx) {
    const Edge& e = g.edges()[static_cast<std::size_t>(i)];
    if (mate[static_cast<std::size_t>(e.u)] == -1 &&
        mate[static_cast<std::size_t>(e.v)] == -1) {
      mate[static_cast<std::size_t>(e.u)] = e.v;
      mate[static_cast<std::size_t>(e.v)] = e.u;
    }
  }
  Matching matching = Matching::from_mates(mate);
  const int matched = 2 * matching.size();
  return RunRecord{Permutation::from_order(std::move(idx)), std::move(matching),
                   matched};
}

RunRecord edge_greedy_run(const Graph& g, std::uint64_t seed) {
  Rng rng(seed);
  return edge_greedy_run(g, rng);
}

Rat ExhaustiveStats::expected_size() const {
  return Rat(sum_sizes, n_factorial);
}

Rat ExhaustiveStats::expected_ratio() const {
  if (mu == 0) return Rat(1);
  return Rat(sum_sizes, n_factorial * mu);
}

ExhaustiveStats exhaustive_stats(const Graph& g, const Matching& opt,
                                 const std::vector<int>& ks,
                                 const ExhaustiveOptions& options) {
  const int n = g.n();
  if (n > options.cap) {
    throw CapExceeded("exhaustive sweep over n=" + std::to_string(n) +
                      " means " + std::to_string(n) +
                      "! permutations; the cap is " + std::to_string(options.cap) +
                      " — raise it explicitly to force the sweep");
  }
  if (!validate_matching(g, opt).valid) {
    throw std::invalid_argument("opt is not a valid matching in g");
  }
  for (int k : ks) {
    if (k < 0) throw std::invalid_argument("requested k must be nonnegative");
  }
  const Matching maximum = maximum_matching(g);
  if (opt.size() != maximum.size()) {
    throw std::invalid_argument(
        "opt must be a maximum matching: |opt| = " + std::to_string(opt.size()) +
        " but mu(G) = " + std::to_string(maximum.size()));
  }

  SweepWorker prototype;
  prototype.g = &g;
  prototype.opt_mate = &opt.mates();
  prototype.mu = opt.size();
  prototype.ks = ks;
  prototype.collect = options.collect_kwis_sets;
  prototype.size_hist.assign(static_cast<std::size_t>(n / 2 + 1), 0);
  prototype.aug3_hist.assign(static_cast<std::size_t>(n / 2 + 1), 0);

  std::vector<SweepWorker> workers =
      permutation_sweep(n, options.threads, prototype);

  ExhaustiveStats stats;
  stats.n = n;
  stats.mu = opt.size();
  stats.n_factorial = factorial(static_cast<unsigned>(n));
  for (const SweepWorker& w : workers) {
    for (std::size_t s = 0; s < w.size_hist.size(); ++s) {
      if (w.size_hist[s] != 0) stats.size_histogram[static_cast<int>(s)] += w.size_hist[s];
    }
    for (std::size_t a = 0; a < w.aug3_hist.size(); ++a) {
      if (w.aug3_hist[a] != 0) stats.aug3_histogram[static_cast<int>(a)] += w.aug3_hist[a];
    }
    stats.sum_sizes += w.sum_sizes;
    stats.sum_aug3 += w.sum_aug3;
    stats.aug3_bound_violations += w.aug3_bound_violations;
    stats.counterpart_violations += w.counterpart_violations;
    for (const auto& [k, sets] : w.occurrences) {
      auto& bucket = stats.kwis_occurrences[k];
      for (const auto& [key, count] : sets) bucket[key] += count;
    }
  }
  for (int k : ks) {
    Int total = 0;
    for (const auto& [a, count] : stats.aug3_histogram) {
      total += count * binomial(static_cast<long>(a), static_cast<long>(k));
    }
    stats.expected_kwis[k] = Rat(total, stats.n_factorial);
  }
  return stats;
}

RatioEstimate estimate_ratio(const Graph& g, const Matching& opt,
                             std::uint64_t samples, std::uint64_t seed,
                             GreedyKind kind, int threads) {
  if (samples == 0) throw std::invalid_argument("need at least one sample");
  if (!validate_matching(g, opt).valid) {
    throw std::invalid_argument("opt is not a valid matching in g");
  }
  const int n = g.n();
  const int mu = opt.size();

  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  int t = resolve_threads(threads);
  if (static_cast<std::uint64_t>(t) > chunks) t = static_cast<int>(chunks);

  std::vector<McTallies> parts(static_cast<std::size_t>(t), McTallies(n));
  std::atomic<std::uint64_t> next{0};
  auto body = [&](McTallies& tally) {
    std::vector<int> order;
    std::vector<int> position;
    std::vector<int> mate;
    std::vector<int> pool;
    for (;;) {
      const std::uint64_t j = next.fetch_add(1);
      if (j >= chunks) break;
      Rng rng = Rng::stream(seed, j);
      const std::uint64_t lo = j * kChunk;
      const std::uint64_t hi = std::min(samples, lo + kChunk);
      for (std::uint64_t s = lo; s < hi; ++s) {
        tally.add(one_sample(g, kind, rng, order, position, mate, pool));
      }
    }
  };
  if (t <= 1) {
    body(parts[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
      pool.emplace_back(body, std::ref(parts[static_cast<std::size_t>(i)]));
    }
    for (auto& th : pool) th.join();
  }

  McTallies total(n);
  for (const McTallies& part : parts) {
    for (std::size_t s = 0; s < part.size_hist.size(); ++s) {
      total.size_hist[s] += part.size_hist[s];
    }
    total.sum += part.sum;
    total.sum_sq += part.sum_sq;
  }

  RatioEstimate est;
  est.algorithm = greedy_kind_name(kind);
  est.samples = samples;
  est.seed = seed;
  est.mu = mu;
  for (std::size_t s = 0; s < total.size_hist.size(); ++s) {
    if (total.size_hist[s] != 0) est.size_histogram[static_cast<int>(s)] = total.size_hist[s];
  }
  const double count = static_cast<double>(samples);
  est.mean_size = static_cast<double>(total.sum) / count;
  // Sample variance of the per-run size from the exact integer sums; all
  // floating-point work happens after the deterministic reduction.
  double variance = 0.0;
  if (samples >= 2) {
    const double mean = est.mean_size;
    variance = (static_cast<double>(total.sum_sq) - count * mean * mean) /
               (count - 1.0);
    if (variance < 0.0) variance = 0.0;  // rounding guard for constant samples
  }
  const double stderr_size = std::sqrt(variance / count);
  if (mu == 0) {
    est.mean_ratio = 1.0;
    est.stderr_ratio = 0.0;
  } else {
    est.mean_ratio = est.mean_size / static_cast<double>(mu);
    est.stderr_ratio = stderr_size / static_cast<double>(mu);
  }
  est.ci95_lo = est.mean_ratio - 1.96 * est.stderr_ratio;
  est.ci95_hi = est.mean_ratio + 1.96 * est.stderr_ratio;
  return est;
}

}  // namespace ranklab
