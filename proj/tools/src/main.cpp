// ranklab — command-line front door for the matching laboratory.
//
// Subcommands: run, estimate, exhaustive, verify-claim, bounds, gen.
// Reports are JSON ({"manifest": ..., "result": ...}); human-readable
// tables go to stdout; --format csv exports histograms. Exit codes:
// 0 success, 1 usage, 2 input error, 3 cap/resource refusal.

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ranklab/blossom.hpp"
#include "ranklab/bounds.hpp"
#include "ranklab/generators.hpp"
#include "ranklab/graph.hpp"
#include "ranklab/ranking.hpp"
#include "ranklab/version.hpp"
#include "ranklab/wis.hpp"

using nlohmann::json;

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitRefusal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("short write to " + path);
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string rat_str(const ranklab::Rat& value) {
  return ranklab::rational_string(value);
}

double rat_approx(const ranklab::Rat& value) {
  return value.convert_to<double>();
}

json make_manifest(const std::string& command, const json& parameters,
                   const std::string& graph_source,
                   const std::string& opt_provenance, const json& rng,
                   int threads) {
  json manifest;
  manifest["tool"] = "ranklab";
  manifest["version"] = ranklab::kVersion;
  manifest["command"] = command;
  manifest["parameters"] = parameters;
  manifest["graph_source"] = graph_source;
  manifest["opt_provenance"] = opt_provenance;
  manifest["rng"] = rng;
  manifest["threads"] = ranklab::resolve_threads(threads);
  manifest["timestamp"] = iso_timestamp();
  return manifest;
}

json rng_entry(std::uint64_t seed) {
  return json{{"algorithm", ranklab::rng_algorithm_name()}, {"seed", seed}};
}

void emit_report(const std::string& out_path, const std::string& format,
                 const json& manifest, const json& result,
                 const std::function<std::string()>& csv_source) {
  if (out_path.empty()) return;
  if (format == "csv") {
    if (!csv_source) {
      throw UsageError("--format csv only applies to histogram-bearing "
                       "commands (estimate, exhaustive)");
    }
    write_file(out_path, csv_source());
  } else {
    json document;
    document["manifest"] = manifest;
    document["result"] = result;
    write_file(out_path, document.dump(2) + "\n");
  }
  std::cout << "report written to " << out_path << "\n";
}

ranklab::Graph load_graph(const std::string& path) {
  return ranklab::parse_graph(read_file(path));
}

struct OptSource {
  ranklab::Matching matching;
  std::string provenance;  // "planted" (file) or "blossom" (derived)
};

OptSource load_opt(const ranklab::Graph& g, const std::string& opt_path) {
  if (opt_path.empty()) {
    return OptSource{ranklab::maximum_matching(g), "blossom"};
  }
  ranklab::Matching planted = ranklab::parse_matching(read_file(opt_path), g.n());
  if (!ranklab::validate_matching(g, planted).valid) {
    throw std::invalid_argument("matching in " + opt_path +
                                " uses edges that are not in the graph");
  }
  const int mu = ranklab::maximum_matching(g).size();
  if (planted.size() != mu) {
    throw std::invalid_argument(
        "matching in " + opt_path + " has size " +
        std::to_string(planted.size()) + " but mu(G) = " + std::to_string(mu) +
        "; the fixed OPT must be maximum");
  }
  return OptSource{std::move(planted), "planted"};
}

json matching_edges_json(const ranklab::Matching& m) {
  json edges = json::array();
  for (const ranklab::Edge& e : m.edges()) {
    edges.push_back(json::array({e.u, e.v}));
  }
  return edges;
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse vertex id '" + token + "'");
    }
    if (used != token.size()) {
      throw UsageError("cannot parse vertex id '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("the vertex set is empty");
  return out;
}

// ---------------------------------------------------------------- run ----

struct RunArgs {
  std::string graph_path;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
};

void require_json_format(const std::string& format) {
  if (format == "csv") {
    throw UsageError("--format csv only applies to histogram-bearing "
                     "commands (estimate, exhaustive)");
  }
}

int cmd_run(const RunArgs& args) {
  require_json_format(args.format);
  const ranklab::Graph g = load_graph(args.graph_path);
  const ranklab::RunRecord record = ranklab::sample_ranking(g, args.seed);
  const ranklab::MatchingFlags flags =
      ranklab::validate_matching(g, record.matching);

  std::cout << "graph: " << args.graph_path << " (n=" << g.n()
            << ", m=" << g.m() << ")\n";
  std::cout << "seed: " << args.seed << "\npermutation:";
  for (int v : record.permutation.order()) std::cout << " " << v;
  std::cout << "\nmatching (size " << record.matching.size() << ", "
            << (flags.maximal ? "maximal" : "NOT MAXIMAL") << ", "
            << (flags.perfect ? "perfect" : "not perfect") << "):\n";
  for (const ranklab::Edge& e : record.matching.edges()) {
    std::cout << "  " << e.u << " " << e.v << "\n";
  }

  json result;
  result["seed"] = args.seed;
  result["n"] = g.n();
  result["m"] = g.m();
  result["permutation"] = record.permutation.order();
  result["matching"] = matching_edges_json(record.matching);
  result["size"] = record.matching.size();
  result["matched_count"] = record.matched_count;
  result["valid"] = flags.valid;
  result["maximal"] = flags.maximal;
  result["perfect"] = flags.perfect;

  const json manifest = make_manifest(
      "run", json{{"graph", args.graph_path}, {"seed", args.seed}},
      args.graph_path, "none", rng_entry(args.seed), 1);
  emit_report(args.out_path, args.format, manifest, result, nullptr);
  return kExitSuccess;
}

// ----------------------------------------------------------- estimate ----

struct EstimateArgs {
  std::string graph_path;
  std::string opt_path;
  std::string algorithm = "ranking";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out_path;
  std::string format = "json";
};

int cmd_estimate(const EstimateArgs& args) {
  const ranklab::Graph g = load_graph(args.graph_path);
  const OptSource opt = load_opt(g, args.opt_path);
  const auto kind = ranklab::parse_greedy_kind(args.algorithm);
  if (!kind) throw UsageError("unknown algorithm '" + args.algorithm + "'");

  const ranklab::RatioEstimate est = ranklab::estimate_ratio(
      g, opt.matching, args.samples, args.seed, *kind, args.threads);

  std::cout << "algorithm: " << est.algorithm << "\nsamples: " << est.samples
            << " (seed " << est.seed << ")\nmu: " << est.mu
            << "\nmean size: " << est.mean_size
            << "\nmean ratio: " << est.mean_ratio << " +- "
            << est.stderr_ratio << " (95% CI [" << est.ci95_lo << ", "
            << est.ci95_hi << "])\n";
  std::cout << "size histogram:\n  size  count\n";
  for (const auto& [size, count] : est.size_histogram) {
    std::cout << "  " << size << "  " << count << "\n";
  }

  json result;
  result["algorithm"] = est.algorithm;
  result["samples"] = est.samples;
  result["seed"] = est.seed;
  result["mu"] = est.mu;
  result["mean_size"] = est.mean_size;
  result["mean_ratio"] = est.mean_ratio;
  result["stderr_ratio"] = est.stderr_ratio;
  result["ci95"] = json::array({est.ci95_lo, est.ci95_hi});
  json histogram;
  for (const auto& [size, count] : est.size_histogram) {
    histogram[std::to_string(size)] = count;
  }
  result["size_histogram"] = histogram;

  const json manifest = make_manifest(
      "estimate",
      json{{"graph", args.graph_path},
           {"opt", args.opt_path},
           {"algorithm", args.algorithm},
           {"samples", args.samples},
           {"seed", args.seed}},
      args.graph_path, opt.provenance, rng_entry(args.seed), args.threads);
  emit_report(args.out_path, args.format, manifest, result, [&est]() {
    std::string csv = "size,count\n";
    for (const auto& [size, count] : est.size_histogram) {
      csv += std::to_string(size) + "," + std::to_string(count) + "\n";
    }
    return csv;
  });
  return kExitSuccess;
}

// --------------------------------------------------------- exhaustive ----

struct ExhaustiveArgs {
  std::string graph_path;
  std::string opt_path;
  std::vector<int> ks = {1};
  int cap = ranklab::kDefaultExhaustiveCap;
  int threads = 0;
  std::string out_path;
  std::string format = "json";
};

json chain_json(const ranklab::ExpectationChainReport& chain) {
  json out;
  out["c"] = rat_str(chain.c);
  out["k"] = chain.k.str();
  out["s"] = chain.s.str();
  out["s_required"] = rat_str(chain.s_required);
  out["mean_ratio"] = rat_str(chain.mean_ratio);
  out["ratio_at_most_half_plus_c"] = chain.ratio_at_most_half_plus_c;
  out["s_meets_requirement"] = chain.s_meets_requirement;
  out["chain_expectation"] = rat_str(chain.chain_expectation);
  out["jensen_expectation"] = rat_str(chain.jensen_expectation);
  out["expected_kwis"] = rat_str(chain.expected_kwis);
  out["chain_le_expected"] = chain.chain_le_expected;
  out["certifies_expectation_ge_one"] = chain.certifies_expectation_ge_one;
  out["pass"] = chain.pass;
  return out;
}

int cmd_exhaustive(const ExhaustiveArgs& args) {
  const ranklab::Graph g = load_graph(args.graph_path);
  const OptSource opt = load_opt(g, args.opt_path);

  ranklab::ExhaustiveOptions options;
  options.threads = args.threads;
  options.cap = args.cap;
  const ranklab::ExhaustiveStats stats =
      ranklab::exhaustive_stats(g, opt.matching, args.ks, options);

  std::cout << "exhaustive sweep: n=" << stats.n << ", mu=" << stats.mu
            << ", " << stats.n_factorial << " permutations\n";
  std::cout << "size histogram:\n  size  count\n";
  for (const auto& [size, count] : stats.size_histogram) {
    std::cout << "  " << size << "  " << count << "\n";
  }
  std::cout << "aug3 histogram:\n  a  count\n";
  for (const auto& [a, count] : stats.aug3_histogram) {
    std::cout << "  " << a << "  " << count << "\n";
  }
  std::cout << "expected size: " << rat_str(stats.expected_size()) << " ("
            << rat_approx(stats.expected_size()) << ")\n";
  std::cout << "expected ratio: " << rat_str(stats.expected_ratio()) << " ("
            << rat_approx(stats.expected_ratio()) << ")\n";
  std::cout << "aug3 bound violations: " << stats.aug3_bound_violations
            << "\ncounterpart violations: " << stats.counterpart_violations
            << "\n";

  json result;
  result["n"] = stats.n;
  result["mu"] = stats.mu;
  result["permutations"] = stats.n_factorial.str();
  json size_hist;
  for (const auto& [size, count] : stats.size_histogram) {
    size_hist[std::to_string(size)] = count.str();
  }
  result["size_histogram"] = size_hist;
  result["sum_sizes"] = stats.sum_sizes.str();
  json aug3_hist;
  for (const auto& [a, count] : stats.aug3_histogram) {
    aug3_hist[std::to_string(a)] = count.str();
  }
  result["aug3_histogram"] = aug3_hist;
  result["sum_aug3"] = stats.sum_aug3.str();
  result["expected_size"] = rat_str(stats.expected_size());
  result["expected_ratio"] = rat_str(stats.expected_ratio());
  result["aug3_bound_violations"] = stats.aug3_bound_violations.str();
  result["counterpart_violations"] = stats.counterpart_violations.str();

  json kwis;
  std::cout << "k-WIS expectations:\n  k  expected  upper-bound  holds  chain\n";
  for (const auto& [k, expected] : stats.expected_kwis) {
    json entry;
    entry["expected"] = rat_str(expected);
    std::string bound_text = "-";
    std::string holds_text = "-";
    if (stats.n % 2 == 0 && 2 * k <= stats.n / 2) {
      const ranklab::Rat bound = ranklab::kwis_expected_upper_bound(stats.n, k);
      const bool holds = expected <= bound;
      entry["expected_upper_bound"] = rat_str(bound);
      entry["upper_bound_holds"] = holds;
      bound_text = rat_str(bound);
      holds_text = holds ? "yes" : "NO";
    } else {
      entry["expected_upper_bound"] = nullptr;
      entry["note"] = "2k exceeds n/2; no bound defined";
    }
    std::string chain_text = "-";
    // k determines c through k = (1/2 - 3c) * n/2; the chain only applies
    // when that c is nonnegative and OPT is perfect.
    if (2 * stats.mu == stats.n && 4 * k <= stats.n) {
      const ranklab::Rat c =
          (ranklab::Rat(1, 2) - ranklab::Rat(2 * k, stats.n)) / 3;
      const ranklab::ExpectationChainReport chain =
          ranklab::kwis_expectation_chain(stats, c);
      entry["chain"] = chain_json(chain);
      chain_text = chain.pass ? "pass" : "FAIL";
    } else {
      entry["chain"] = nullptr;
    }
    kwis[std::to_string(k)] = entry;
    std::cout << "  " << k << "  " << rat_str(expected) << "  " << bound_text
              << "  " << holds_text << "  " << chain_text << "\n";
  }
  result["kwis"] = kwis;

  const json manifest = make_manifest(
      "exhaustive",
      json{{"graph", args.graph_path},
           {"opt", args.opt_path},
           {"k", args.ks},
           {"cap", args.cap}},
      args.graph_path, opt.provenance, nullptr, args.threads);
  emit_report(args.out_path, args.format, manifest, result, [&stats]() {
    std::string csv = "histogram,key,count\n";
    for (const auto& [size, count] : stats.size_histogram) {
      csv += "size," + std::to_string(size) + "," + count.str() + "\n";
    }
    for (const auto& [a, count] : stats.aug3_histogram) {
      csv += "aug3," + std::to_string(a) + "," + count.str() + "\n";
    }
    return csv;
  });
  return kExitSuccess;
}

// ------------------------------------------------------- verify-claim ----

struct VerifyArgs {
  std::string graph_path;
  std::string opt_path;
  std::string set_text;
  std::uint64_t samples = 0;  // 0 = exhaustive
  std::uint64_t seed = 0;
  int cap = ranklab::kDefaultExhaustiveCap;
  int threads = 0;
  std::string out_path;
  std::string format = "json";
};

int cmd_verify_claim(const VerifyArgs& args) {
  require_json_format(args.format);
  const ranklab::Graph g = load_graph(args.graph_path);
  const OptSource opt = load_opt(g, args.opt_path);
  const std::vector<int> vertex_set = parse_vertex_list(args.set_text);

  json result;
  result["set"] = vertex_set;

  if (args.samples == 0) {
    const ranklab::SetProbabilityReport report = ranklab::kwis_set_report(
        g, opt.matching, vertex_set, args.threads, args.cap);
    std::cout << "mode: exhaustive (" << report.total << " permutations)\n"
              << "k: " << report.k << "\nhits: " << report.hits << "\n"
              << "probability: " << rat_str(report.probability) << " ("
              << rat_approx(report.probability) << ")\n"
              << "bound 1/4^k: " << rat_str(report.bound) << " — "
              << (report.bound_holds ? "holds" : "VIOLATED") << "\n"
              << "counterpart order: " << report.counterpart_violations
              << " violations in " << report.counterpart_checked
              << " checks\n";
    result["mode"] = "exhaustive";
    result["k"] = report.k;
    result["permutations"] = report.total.str();
    result["hits"] = report.hits.str();
    result["probability"] = rat_str(report.probability);
    result["bound"] = rat_str(report.bound);
    result["bound_holds"] = report.bound_holds;
    result["counterpart_checked"] = report.counterpart_checked.str();
    result["counterpart_violations"] = report.counterpart_violations.str();
  } else {
    const ranklab::ProbabilityEstimate est = ranklab::kwis_probability_montecarlo(
        g, opt.matching, vertex_set, args.samples, args.seed, args.threads);
    const int k = static_cast<int>(vertex_set.size()) / 2;
    const ranklab::Rat bound(
        1, boost::multiprecision::pow(ranklab::Int(4), static_cast<unsigned>(k)));
    std::cout << "mode: montecarlo (" << est.samples << " samples, seed "
              << args.seed << ")\nk: " << k << "\nhits: " << est.hits << "\n"
              << "estimate: " << est.point << " (95% Wilson ["
              << est.wilson_lo << ", " << est.wilson_hi << "])\n"
              << "bound 1/4^k: " << rat_str(bound)
              << " (sampled mode reports the interval, it asserts nothing)\n"
              << "counterpart order: " << est.counterpart_violations
              << " violations in " << est.counterpart_checked << " checks\n";
    result["mode"] = "montecarlo";
    result["k"] = k;
    result["samples"] = est.samples;
    result["seed"] = args.seed;
    result["hits"] = est.hits;
    result["point"] = est.point;
    result["wilson95"] = json::array({est.wilson_lo, est.wilson_hi});
    result["bound"] = rat_str(bound);
    result["counterpart_checked"] = est.counterpart_checked;
    result["counterpart_violations"] = est.counterpart_violations;
  }

  const json manifest = make_manifest(
      "verify-claim",
      json{{"graph", args.graph_path},
           {"opt", args.opt_path},
           {"set", vertex_set},
           {"samples", args.samples},
           {"seed", args.seed},
           {"cap", args.cap}},
      args.graph_path, opt.provenance,
      args.samples == 0 ? json(nullptr) : rng_entry(args.seed), args.threads);
  emit_report(args.out_path, args.format, manifest, result, nullptr);
  return kExitSuccess;
}

// -------------------------------------------------------------- bounds ----

struct BoundsArgs {
  std::string c_text = "1/200";
  int precision_bits = 30;
  std::string out_path;
  std::string format = "json";
};

int cmd_bounds(const BoundsArgs& args) {
  require_json_format(args.format);
  const ranklab::Rat c = ranklab::parse_rational(args.c_text);
  const ranklab::ThresholdReport report =
      ranklab::threshold_report(c, args.precision_bits);

  std::cout << "c = " << rat_str(report.c) << " (" << rat_approx(report.c)
            << ")\n"
            << "f(c) = H(6c) + log2(3/4)*(1/2 - 3c) = "
            << ranklab::real_string(report.f_of_c) << "\n"
            << "verdict: " << (report.verdict < 0   ? "negative"
                               : report.verdict > 0 ? "positive"
                                                    : "zero")
            << "\n"
            << "root bracket: (" << rat_str(report.root_lo) << ", "
            << rat_str(report.root_hi) << ")\n"
            << "              = (" << rat_approx(report.root_lo) << ", "
            << rat_approx(report.root_hi) << ")\n"
            << "bracket width <= 2^-" << report.precision_bits << "\n";

  json result;
  result["c"] = rat_str(report.c);
  result["f_of_c"] = ranklab::real_string(report.f_of_c);
  result["verdict"] = report.verdict;
  result["root_lo"] = rat_str(report.root_lo);
  result["root_hi"] = rat_str(report.root_hi);
  result["root_lo_decimal"] = rat_approx(report.root_lo);
  result["root_hi_decimal"] = rat_approx(report.root_hi);
  result["f_root_lo"] = ranklab::real_string(report.f_root_lo);
  result["f_root_hi"] = ranklab::real_string(report.f_root_hi);
  result["precision_bits"] = report.precision_bits;

  const json manifest = make_manifest(
      "bounds",
      json{{"c", args.c_text}, {"precision", args.precision_bits}}, "none",
      "none", nullptr, 1);
  emit_report(args.out_path, args.format, manifest, result, nullptr);
  return kExitSuccess;
}

// ----------------------------------------------------------------- gen ----

struct GenArgs {
  std::string spec;
  std::string graph_path;  // input instance for replicate
  std::string opt_path;
  std::uint64_t seed = 0;
  std::string out_path;
};

std::map<std::string, std::string> parse_spec_params(const std::string& text) {
  std::map<std::string, std::string> params;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos) {
      throw UsageError("spec parameter '" + token + "' is not key=value");
    }
    params[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return params;
}

int parse_int_text(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError("cannot parse " + what + " '" + text + "'");
  }
}

int cmd_gen(const GenArgs& args) {
  const std::size_t colon = args.spec.find(':');
  const std::string name = args.spec.substr(0, colon);
  const std::string params_text =
      colon == std::string::npos ? "" : args.spec.substr(colon + 1);

  ranklab::Instance instance;
  if (name == "gadget-chain") {
    const int copies = parse_int_text(params_text, "copy count");
    instance = ranklab::gen_gadget_chain(copies);
  } else if (name == "replicate") {
    const auto params = parse_spec_params(params_text);
    if (!params.count("b")) throw UsageError("replicate needs b=<copies/2>");
    if (args.graph_path.empty() || args.opt_path.empty()) {
      throw UsageError("replicate needs --graph and --opt as the instance to copy");
    }
    const ranklab::Graph g = load_graph(args.graph_path);
    const ranklab::Matching opt =
        ranklab::parse_matching(read_file(args.opt_path), g.n());
    instance =
        ranklab::gen_replicated(g, opt, parse_int_text(params.at("b"), "b"));
  } else if (name == "random-planted") {
    const auto params = parse_spec_params(params_text);
    if (!params.count("n") || !params.count("p")) {
      throw UsageError("random-planted needs n=<even> and p=<probability>");
    }
    const int n = parse_int_text(params.at("n"), "n");
    double p = 0;
    try {
      p = std::stod(params.at("p"));
    } catch (const std::exception&) {
      throw UsageError("cannot parse probability '" + params.at("p") + "'");
    }
    instance = ranklab::gen_random_planted(n, p, args.seed);
  } else {
    throw UsageError("unknown generator '" + name +
                     "' (expected gadget-chain, replicate, random-planted)");
  }

  const std::string graph_out = args.out_path;
  const std::string opt_out = args.out_path + ".opt";
  write_file(graph_out, ranklab::serialize_graph(instance.graph));
  write_file(opt_out, ranklab::serialize_matching(instance.planted_opt));
  std::cout << "spec: " << args.spec << "\n"
            << "graph: " << graph_out << " (n=" << instance.graph.n()
            << ", m=" << instance.graph.m() << ")\n"
            << "planted matching: " << opt_out << " ("
            << instance.planted_opt.size() << " edges)\n";
  return kExitSuccess;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ranklab::CapExceeded& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitRefusal;
  } catch (const ranklab::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-matching laboratory: randomized greedy matching, "
               "exhaustive permutation sweeps, and bound verification"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run_cmd = app.add_subcommand("run", "one seeded RANKING run");
  run_cmd->add_option("--graph", run_args.graph_path, "edge-list file")
      ->required();
  run_cmd->add_option("--seed", run_args.seed, "RNG seed");
  run_cmd->add_option("--out", run_args.out_path, "JSON report path");
  run_cmd->add_option("--format", run_args.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  EstimateArgs est_args;
  CLI::App* est_cmd =
      app.add_subcommand("estimate", "Monte Carlo approximation-ratio estimate");
  est_cmd->add_option("--graph", est_args.graph_path, "edge-list file")
      ->required();
  est_cmd->add_option("--opt", est_args.opt_path,
                      "fixed maximum matching (derived via blossom if absent)");
  est_cmd->add_option("--algorithm", est_args.algorithm,
                      "ranking|mrg|edge-greedy")
      ->check(CLI::IsMember({"ranking", "mrg", "edge-greedy"}));
  est_cmd->add_option("--samples", est_args.samples, "sample count")
      ->check(CLI::PositiveNumber);
  est_cmd->add_option("--seed", est_args.seed, "RNG seed");
  est_cmd->add_option("--threads", est_args.threads, "worker threads (0 = all)");
  est_cmd->add_option("--out", est_args.out_path, "report path");
  est_cmd->add_option("--format", est_args.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  ExhaustiveArgs exh_args;
  CLI::App* exh_cmd = app.add_subcommand(
      "exhaustive", "exact sweep over all n! permutations");
  exh_cmd->add_option("--graph", exh_args.graph_path, "edge-list file")
      ->required();
  exh_cmd->add_option("--opt", exh_args.opt_path,
                      "fixed maximum matching (derived via blossom if absent)");
  exh_cmd->add_option("--k", exh_args.ks, "k values for expected k-WIS")
      ->delimiter(',');
  exh_cmd->add_option("--cap", exh_args.cap, "largest n the sweep accepts");
  exh_cmd->add_option("--threads", exh_args.threads, "worker threads (0 = all)");
  exh_cmd->add_option("--out", exh_args.out_path, "report path");
  exh_cmd->add_option("--format", exh_args.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify-claim",
      "probability that a vertex set is a k-WIS, with counterpart ordering");
  verify_cmd->add_option("--graph", verify_args.graph_path, "edge-list file")
      ->required();
  verify_cmd->add_option("--opt", verify_args.opt_path,
                         "perfect matching file (derived via blossom if absent)");
  verify_cmd
      ->add_option("--set", verify_args.set_text,
                   "comma-separated vertex ids, e.g. 0,3,4,7")
      ->required();
  verify_cmd->add_option("--samples", verify_args.samples,
                         "Monte Carlo samples (0 = exhaustive)");
  verify_cmd->add_option("--seed", verify_args.seed, "RNG seed (sampled mode)");
  verify_cmd->add_option("--cap", verify_args.cap, "largest n the sweep accepts");
  verify_cmd->add_option("--threads", verify_args.threads,
                         "worker threads (0 = all)");
  verify_cmd->add_option("--out", verify_args.out_path, "report path");
  verify_cmd->add_option("--format", verify_args.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  BoundsArgs bounds_args;
  CLI::App* bounds_cmd = app.add_subcommand(
      "bounds", "threshold function sign and root bracket");
  bounds_cmd->add_option("--c", bounds_args.c_text,
                         "rational c, e.g. 1/200 or 0.005");
  bounds_cmd->add_option("--precision", bounds_args.precision_bits,
                         "bracket width exponent (width <= 2^-precision)")
      ->check(CLI::Range(1, 100));
  bounds_cmd->add_option("--out", bounds_args.out_path, "report path");
  bounds_cmd->add_option("--format", bounds_args.format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  GenArgs gen_args;
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "generate an instance with planted OPT");
  gen_cmd
      ->add_option("--spec", gen_args.spec,
                   "gadget-chain:<copies> | replicate:b=<B> | "
                   "random-planted:n=<N>,p=<P>")
      ->required();
  gen_cmd->add_option("--graph", gen_args.graph_path,
                      "input graph (replicate only)");
  gen_cmd->add_option("--opt", gen_args.opt_path,
                      "input planted matching (replicate only)");
  gen_cmd->add_option("--seed", gen_args.seed, "RNG seed");
  gen_cmd->add_option("--out", gen_args.out_path,
                      "output graph path (matching goes to <out>.opt)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*run_cmd) return guarded([&] { return cmd_run(run_args); });
  if (*est_cmd) return guarded([&] { return cmd_estimate(est_args); });
  if (*exh_cmd) return guarded([&] { return cmd_exhaustive(exh_args); });
  if (*verify_cmd) return guarded([&] { return cmd_verify_claim(verify_args); });
  if (*bounds_cmd) return guarded([&] { return cmd_bounds(bounds_args); });
  if (*gen_cmd) return guarded([&] { return cmd_gen(gen_args); });
  return kExitUsage;
}
