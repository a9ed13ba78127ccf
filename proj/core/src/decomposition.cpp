#include "ranklab/decomposition.hpp"

#include <algorithm>

namespace ranklab {

namespace {

// Neighbor of v along its m-edge if that edge is in the symmetric
// difference, else -1.
inline int diff_mate(const Matching& a, const Matching& b, int v) {
  int w = a.mate(v);
  if (w == -1 || b.mate(v) == w) return -1;
  return w;
}

}  // namespace

AugDecomposition symmetric_difference(const Matching& m, const Matching& opt,
                                      const Graph& g) {
  if (!validate_matching(g, m).valid || !validate_matching(g, opt).valid)
    throw std::invalid_argument("symmetric_difference: matchings must be valid in g");

  const int n = g.n();
  AugDecomposition result;
  std::vector<char> visited(static_cast<std::size_t>(n), 0);

  // dm[v]/dv[v]: neighbor along the M- resp. OPT-edge of v inside the
  // difference; degree of v in M(+)OPT is the count of non(-1) entries.
  auto walk_from = [&](int start, bool cycle) {
    Component comp;
    comp.is_cycle = cycle;
    int prev = -1;
    int cur = start;
    while (cur != -1 && !visited[static_cast<std::size_t>(cur)]) {
      visited[static_cast<std::size_t>(cur)] = 1;
      comp.vertices.push_back(cur);
      int via_m = diff_mate(m, opt, cur);
      int via_opt = diff_mate(opt, m, cur);
      int next = (via_m != -1 && via_m != prev) ? via_m : (via_opt != prev ? via_opt : -1);
      prev = cur;
      cur = next;
    }
    return comp;
  };

  for (int v = 0; v < n; ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    int deg = (diff_mate(m, opt, v) != -1) + (diff_mate(opt, m, v) != -1);
    if (deg != 1) continue;  // path endpoints first; cycles in the second pass
    Component comp = walk_from(v, false);
    const auto& vs = comp.vertices;
    comp.augmenting = !m.is_matched(vs.front()) && !m.is_matched(vs.back());
    if (comp.augmenting && comp.length() == 3) {
      Aug3Path p{vs[0], vs[1], vs[2], vs[3]};
      if (p.d < p.a) p = Aug3Path{p.d, p.c, p.b, p.a};
      result.aug3.push_back(p);
    }
    result.components.push_back(std::move(comp));
  }
  for (int v = 0; v < n; ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    int deg = (diff_mate(m, opt, v) != -1) + (diff_mate(opt, m, v) != -1);
    if (deg == 0) continue;
    result.components.push_back(walk_from(v, true));
  }
  std::sort(result.aug3.begin(), result.aug3.end());
  return result;
}

int count_aug3_by_edge_scan(const Matching& m, const Matching& opt) {
  int count = 0;
  for (const Edge& e : m.edges()) {
    int a = opt.mate(e.u);
    int b = opt.mate(e.v);
    if (a == -1 || b == -1 || a == e.v) continue;  // a == e.v means the edge is in both
    if (!m.is_matched(a) && !m.is_matched(b)) ++count;
  }
  return count;
}

}  // namespace ranklab
