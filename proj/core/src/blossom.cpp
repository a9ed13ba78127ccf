#include "ranklab/blossom.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace ranklab {

namespace {

// Edmonds' algorithm with blossom contraction tracked through base[].
// Alternating forests are grown from one free root at a time; odd cycles
// are contracted by redirecting base pointers to the cycle's base vertex.
class BlossomSolver {
 public:
  explicit BlossomSolver(const Graph& g)
      : g_(g),
        n_(g.n()),
        match_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_)),
        queue_(),
        in_queue_(static_cast<std::size_t>(n_), 0),
        in_blossom_(static_cast<std::size_t>(n_), 0),
        path_mark_(static_cast<std::size_t>(n_), 0) {}

  Matching solve() {
    greedy_seed();
    for (int v = 0; v < n_; ++v)
      if (match_[static_cast<std::size_t>(v)] == -1) {
        int leaf = find_augmenting_path(v);
        if (leaf != -1) augment(leaf);
      }
    return Matching::from_mates(match_);
  }

 private:
  void greedy_seed() {
    for (const Edge& e : g_.edges())
      if (match_[static_cast<std::size_t>(e.u)] == -1 &&
          match_[static_cast<std::size_t>(e.v)] == -1) {
        match_[static_cast<std::size_t>(e.u)] = e.v;
        match_[static_cast<std::size_t>(e.v)] = e.u;
      }
  }

  int lca(int a, int b) {
    std::fill(path_mark_.begin(), path_mark_.end(), 0);
    int v = a;
    while (true) {
      v = base_[static_cast<std::size_t>(v)];
      path_mark_[static_cast<std::size_t>(v)] = 1;
      if (match_[static_cast<std::size_t>(v)] == -1) break;  // reached the root
      v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
    }
    v = b;
    while (true) {
      v = base_[static_cast<std::size_t>(v)];
      if (path_mark_[static_cast<std::size_t>(v)]) return v;
      v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
    }
  }

  void mark_blossom_path(int v, int blossom_base, int child) {
    while (base_[static_cast<std::size_t>(v)] != blossom_base) {
      int mv = match_[static_cast<std::size_t>(v)];
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  void contract(int v, int u) {
    int blossom_base = lca(v, u);
    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
    mark_blossom_path(v, blossom_base, u);
    mark_blossom_path(u, blossom_base, v);
    for (int i = 0; i < n_; ++i)
      if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
        base_[static_cast<std::size_t>(i)] = blossom_base;
        if (!in_queue_[static_cast<std::size_t>(i)]) {
          in_queue_[static_cast<std::size_t>(i)] = 1;
          queue_.push_back(i);
        }
      }
  }

  // Grows an alternating tree from root; returns the free leaf of an
  // augmenting path, or -1 when none exists.
  int find_augmenting_path(int root) {
    std::fill(in_queue_.begin(), in_queue_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    queue_.push_back(root);
    in_queue_[static_cast<std::size_t>(root)] = 1;

    for (std::size_t head = 0; head < queue_.size(); ++head) {
      int v = queue_[head];
      for (int to : g_.neighbors(v)) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            match_[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (match_[static_cast<std::size_t>(to)] != -1 &&
             parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
          // 'to' is an even vertex: the edge closes an odd cycle
          contract(v, to);
        } else if (parent_[static_cast<std::size_t>(to)] == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          int mt = match_[static_cast<std::size_t>(to)];
          if (mt == -1) return to;
          if (!in_queue_[static_cast<std::size_t>(mt)]) {
            in_queue_[static_cast<std::size_t>(mt)] = 1;
            queue_.push_back(mt);
          }
        }
      }
    }
    return -1;
  }

  void augment(int leaf) {
    int v = leaf;
    while (v != -1) {
      int pv = parent_[static_cast<std::size_t>(v)];
      int next = match_[static_cast<std::size_t>(pv)];
      match_[static_cast<std::size_t>(v)] = pv;
      match_[static_cast<std::size_t>(pv)] = v;
      v = next;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, parent_, base_;
  std::vector<int> queue_;
  std::vector<char> in_queue_, in_blossom_, path_mark_;
};

// Recursive exact search: either skip the lowest free vertex or match it to
// one of its free neighbors.
class BruteForce {
 public:
  explicit BruteForce(const Graph& g)
      : g_(g), mate_(static_cast<std::size_t>(g.n()), -1), best_(mate_) {}

  Matching run() {
    descend(0, 0);
    return Matching::from_mates(best_);
  }

 private:
  void descend(int v, int size) {
    const int n = g_.n();
    while (v < n && mate_[static_cast<std::size_t>(v)] != -1) ++v;
    if (v == n) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = mate_;
      }
      return;
    }
    // even a perfect completion of the remaining vertices cannot win: prune
    if (size + (n - v) / 2 <= best_size_) return;
    descend(v + 1, size);  // leave v unmatched
    for (int u : g_.neighbors(v)) {
      if (u < v || mate_[static_cast<std::size_t>(u)] != -1) continue;
      mate_[static_cast<std::size_t>(v)] = u;
      mate_[static_cast<std::size_t>(u)] = v;
      descend(v + 1, size + 1);
      mate_[static_cast<std::size_t>(v)] = -1;
      mate_[static_cast<std::size_t>(u)] = -1;
    }
  }

  const Graph& g_;
  std::vector<int> mate_;
  std::vector<int> best_;
  int best_size_ = -1;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return BlossomSolver(g).solve(); }

Matching brute_force_maximum(const Graph& g, int cap) {
  if (g.n() > cap)
    throw CapExceeded("brute_force_maximum: n = " + std::to_string(g.n()) +
                      " exceeds cap " + std::to_string(cap));
  return BruteForce(g).run();
}

bool has_perfect_matching(const Graph& g) {
  return g.n() % 2 == 0 && maximum_matching(g).size() * 2 == g.n();
}

}  // namespace ranklab
