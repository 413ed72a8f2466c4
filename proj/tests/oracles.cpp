#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace prodstab::oracles {

std::vector<Permutation> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

unsigned long long closure_order(int degree,
                                 const std::vector<Permutation>& gens) {
  std::set<std::vector<int>> seen;
  std::vector<Permutation> frontier{Permutation::identity(degree)};
  seen.insert(frontier[0].images());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& g : gens) {
        Permutation q = compose(p, g);
        if (seen.insert(q.images()).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::vector<Permutation> brute_automorphisms(const Graph& g) {
  int n = g.order();
  std::vector<Permutation> out;
  for (const auto& p : all_perms(n)) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u; v < n && ok; ++v)
        if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) ok = false;
    if (ok) out.push_back(p);
  }
  return out;
}

unsigned long long brute_tfa_pairs(const Graph& g) {
  int n = g.order();
  std::vector<std::pair<int, int>> arcs;
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (g.adjacent(s, t)) arcs.emplace_back(s, t);
  auto perms = all_perms(n);
  unsigned long long count = 0;
  for (const auto& a : perms)
    for (const auto& b : perms) {
      bool ok = true;
      for (auto [s, t] : arcs)
        if (!g.adjacent(a(s), b(t))) {
          ok = false;
          break;
        }
      count += ok;
    }
  return count;
}

bool brute_direct_split_exists(const Graph& g, int d) {
  int n = g.order(), m = n / d;
  std::vector<std::pair<int, int>> edges;  // ordered pairs u <= v incl loops
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (g.adjacent(u, v)) edges.emplace_back(u, v);

  // vertex k sits in cell perm[k]; vertex 0 pinned to cell 0, which any
  // relabeling of the two factors can arrange
  std::vector<int> cell(n);
  std::iota(cell.begin(), cell.end(), 0);
  int row[16], col[16];
  char re[16][16], ce[16][16];
  do {
    for (int v = 0; v < n; ++v) {
      row[v] = cell[v] / d;
      col[v] = cell[v] % d;
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) re[a][b] = 0;
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) ce[a][b] = 0;
    for (auto [u, v] : edges) {
      re[row[u]][row[v]] = re[row[v]][row[u]] = 1;
      ce[col[u]][col[v]] = ce[col[v]][col[u]] = 1;
    }
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u; v < n && ok; ++v)
        if (g.adjacent(u, v) != bool(re[row[u]][row[v]] && ce[col[u]][col[v]]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(cell.begin() + 1, cell.end()));
  return false;
}

int brute_class_count(int n, const BruteFilter& filter) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + (filter.loops ? 0 : 1); j < n; ++j)
      slots.emplace_back(i, j);
  int s = int(slots.size());
  std::vector<std::vector<int>> slot_index(n, std::vector<int>(n, -1));
  for (int k = 0; k < s; ++k) slot_index[slots[k].first][slots[k].second] = k;

  auto perms = all_perms(n);
  std::set<std::uint64_t> canon;
  int count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s); ++mask) {
    std::uint64_t best = ~std::uint64_t(0);
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (int k = 0; k < s; ++k)
        if ((mask >> k) & 1) {
          int a = p(slots[k].first), b = p(slots[k].second);
          image |= std::uint64_t(1) << slot_index[std::min(a, b)][std::max(a, b)];
        }
      best = std::min(best, image);
    }
    if (!canon.insert(best).second) continue;
    Graph g(n);
    for (int k = 0; k < s; ++k)
      if ((best >> k) & 1) g.add_edge(slots[k].first, slots[k].second);
    if (filter.require_connected && !is_connected(g)) continue;
    if (filter.require_twin_free && !is_twin_free(g)) continue;
    ++count;
  }
  return count;
}

}  // namespace prodstab::oracles
