#include "ranklab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace ranklab {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::sort(edges.begin(), edges.end());
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(n, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    if (i > 0 && edges[i - 1] == e)
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  g.edges_ = std::move(edges);
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Matching Matching::from_edges(int n, std::vector<Edge> edges) {
  Matching m;
  m.mate_.assign(n, -1);
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v)
      throw std::invalid_argument("matching edge out of range");
    if (m.mate_[e.u] != -1 || m.mate_[e.v] != -1)
      throw std::invalid_argument("matching edges share vertex " +
                                  std::to_string(m.mate_[e.u] != -1 ? e.u : e.v));
    m.mate_[e.u] = e.v;
    m.mate_[e.v] = e.u;
  }
  m.edges_ = std::move(edges);
  return m;
}

Matching Matching::from_mates(std::span<const int> mate) {
  std::vector<Edge> edges;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    int w = mate[v];
    if (w == -1) continue;
    if (w < 0 || w >= static_cast<int>(mate.size()) || mate[w] != v)
      throw std::invalid_argument("mate array is not an involution");
    if (v < w) edges.emplace_back(v, w);
  }
  return from_edges(static_cast<int>(mate.size()), std::move(edges));
}

MatchingFlags validate_matching(const Graph& g, std::span<const Edge> candidate) {
  MatchingFlags flags;
  std::vector<int> mate(g.n(), -1);
  for (const Edge& e : candidate) {
    if (e.u < 0 || e.v >= g.n() || e.u == e.v) return flags;
    if (!g.has_edge(e.u, e.v)) return flags;
    if (mate[e.u] != -1 || mate[e.v] != -1) return flags;
    mate[e.u] = e.v;
    mate[e.v] = e.u;
  }
  flags.valid = true;
  flags.maximal = true;
  for (const Edge& e : g.edges())
    if (mate[e.u] == -1 && mate[e.v] == -1) {
      flags.maximal = false;
      break;
    }
  flags.perfect =
      std::none_of(mate.begin(), mate.end(), [](int w) { return w == -1; });
  return flags;
}

MatchingFlags validate_matching(const Graph& g, const Matching& m) {
  if (m.n() != g.n()) return MatchingFlags{};
  return validate_matching(g, std::span<const Edge>(m.edges()));
}

namespace {

// Parses exactly two nonnegative integers separated by blanks.
bool parse_int_pair(const std::string& line, long& a, long& b) {
  const char* p = line.data();
  const char* end = p + line.size();
  auto skip = [&] {
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  skip();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc{}) return false;
  p = r1.ptr;
  skip();
  auto r2 = std::from_chars(p, end, b);
  if (r2.ec != std::errc{}) return false;
  p = r2.ptr;
  skip();
  return p == end;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (!parse_int_pair(line, n, m) || n < 0 || m < 0)
      throw ParseError(line_no, "expected header 'n m', got '" + line + "'");
    break;
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'n m' header");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<Edge> seen_edges;
  long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    long u, v;
    if (!parse_int_pair(line, u, v))
      throw ParseError(line_no, "expected edge 'u v', got '" + line + "'");
    if (seen == m) throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
    if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    Edge e(static_cast<int>(u), static_cast<int>(v));
    if (!seen_edges.insert(e).second)
      throw ParseError(line_no,
                       "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
    ++seen;
  }
  if (seen != m)
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges, found " +
                                  std::to_string(seen));
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Matching parse_matching(const std::string& text, int n) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  long k = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    const char* p = line.data();
    auto r = std::from_chars(p, p + line.size(), k);
    if (r.ec != std::errc{} || k < 0) throw ParseError(line_no, "expected edge count 'k'");
    break;
  }
  if (k < 0) throw ParseError(1, "missing edge count header");
  std::vector<Edge> edges;
  long seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    long u, v;
    if (!parse_int_pair(line, u, v))
      throw ParseError(line_no, "expected matching edge 'u v'");
    if (u == v || u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "bad matching edge " + std::to_string(u) + " " + std::to_string(v));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (seen != k)
    throw ParseError(line_no, "declared " + std::to_string(k) + " matching edges, found " +
                                  std::to_string(seen));
  try {
    return Matching::from_edges(n, std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw ParseError(line_no, err.what());
  }
}

std::string serialize_matching(const Matching& m) {
  std::ostringstream out;
  out << m.size() << '\n';
  for (const Edge& e : m.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace ranklab
