#pragma once

// Graph and matching data model. Vertices are dense ids 0..n-1; input graphs
// with labels must be pre-mapped before they reach this layer. Graph and
// Matching are immutable after construction and safe to share across
// parallel workers.

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ranklab {

struct Edge {
  int u;
  int v;

  Edge() : u(0), v(0) {}
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges, or ids >= n.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;                  // sorted
  std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
};

class Matching {
 public:
  Matching() = default;

  // Throws std::invalid_argument if edges share a vertex or ids are out of
  // range. Use validate_matching to judge arbitrary candidate edge sets.
  static Matching from_edges(int n, std::vector<Edge> edges);
  static Matching from_mates(std::span<const int> mate);
  static Matching empty(int n) { return from_edges(n, {}); }

  int n() const { return static_cast<int>(mate_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  // -1 when unmatched.
  int mate(int v) const { return mate_[v]; }
  bool is_matched(int v) const { return mate_[v] != -1; }
  const std::vector<int>& mates() const { return mate_; }

  friend bool operator==(const Matching& a, const Matching& b) {
    return a.mate_ == b.mate_;
  }

 private:
  std::vector<Edge> edges_;  // sorted
  std::vector<int> mate_;
};

struct MatchingFlags {
  bool valid = false;
  bool maximal = false;
  bool perfect = false;
};

// Judges an arbitrary candidate edge set against g: valid iff every edge is
// in g and no vertex repeats; maximal iff no g-edge has both endpoints
// unmatched; perfect iff all vertices are matched. An invalid candidate
// reports maximal = perfect = false.
MatchingFlags validate_matching(const Graph& g, std::span<const Edge> candidate);
MatchingFlags validate_matching(const Graph& g, const Matching& m);

// Edge-list text format: first line "n m", then m lines "u v".
// Errors carry the offending line number.
Graph parse_graph(const std::string& text);

// Canonical form: sorted edges, one per line, LF-terminated.
std::string serialize_graph(const Graph& g);

// Sidecar matching format: first line "k", then k lines "u v".
Matching parse_matching(const std::string& text, int n);
std::string serialize_matching(const Matching& m);

}  // namespace ranklab
