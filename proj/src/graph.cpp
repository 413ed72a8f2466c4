#include "prodstab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace prodstab {

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: need n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph circulant(int n, const std::vector<int>& connection) {
  if (n < 1) throw std::invalid_argument("circulant: need n >= 1");
  Graph g(n);
  for (int c : connection) {
    int r = ((c % n) + n) % n;
    if (r == 0)
      throw std::invalid_argument("circulant: residue 0 would be a loop");
    for (int u = 0; u < n; ++u) g.add_edge(u, (u + r) % n);  // symmetrizes
  }
  return g;
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: need n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(a.order() + u, a.order() + v);
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
  Graph h(int(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j])) h.add_edge(int(i), int(j));
  return h;
}

std::vector<int> neighbors(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("neighbors: vertex out of range");
  return g.row(v).to_vector();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      g.row(comp[head]).for_each([&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return connected_components(g).size() == 1;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  int n = g.order();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;  // smallest vertex of each component goes to U
    std::vector<int> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      bool odd_walk = false;
      g.row(v).for_each([&](int w) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          odd_walk = true;  // covers loops: w == v
        }
      });
      if (odd_walk) return std::nullopt;
    }
  }
  Bipartition b;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? b.part_u : b.part_w).push_back(v);
  return b;
}

bool is_twin_free(const Graph& g) {
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.row(u) == g.row(v)) return false;
  return true;
}

}  // namespace prodstab
