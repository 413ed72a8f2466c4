#include "prodstab/skeleton.hpp"

#include <stdexcept>

namespace prodstab {

namespace {

bool dispensable_inner(const Graph& g, int u, int v) {
  const Bitset& nu = g.row(u);
  const Bitset& nv = g.row(v);
  Bitset nuv = nu & nv;
  for (int w = 0; w < g.order(); ++w) {
    const Bitset& nw = g.row(w);
    bool c1 = nuv.is_proper_subset_of(nu & nw) ||
              (nu.is_proper_subset_of(nw) && nw.is_proper_subset_of(nv));
    if (!c1) continue;
    bool c2 = nuv.is_proper_subset_of(nv & nw) ||
              (nv.is_proper_subset_of(nw) && nw.is_proper_subset_of(nu));
    if (c2) return true;
  }
  return false;
}

}  // namespace

Graph boolean_square(const Graph& g) {
  int n = g.order();
  Graph b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.row(u).intersects(g.row(v))) b.add_edge(u, v);
  return b;
}

bool is_dispensable(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v ||
      !g.row(u).intersects(g.row(v)))
    throw std::invalid_argument(
        "is_dispensable: {u,v} is not an edge of the boolean square");
  return dispensable_inner(g, u, v);
}

Graph cartesian_skeleton(const Graph& g) {
  Graph s = boolean_square(g);
  // all removals judged against g, then applied together
  std::vector<std::pair<int, int>> drop;
  for (auto [u, v] : s.edges())
    if (dispensable_inner(g, u, v)) drop.emplace_back(u, v);
  for (auto [u, v] : drop) s.remove_edge(u, v);
  return s;
}

std::vector<std::pair<std::vector<int>, Graph>> skeleton_components(
    const Graph& g) {
  Graph s = cartesian_skeleton(g);
  std::vector<std::pair<std::vector<int>, Graph>> out;
  for (auto& comp : connected_components(s))
    out.emplace_back(comp, induced_subgraph(s, comp));
  return out;
}

}  // namespace prodstab
