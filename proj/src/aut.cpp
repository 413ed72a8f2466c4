#include "prodstab/aut.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "prodstab/errors.hpp"

namespace prodstab {

namespace {

// One refinement pass over the disjoint vertex list of both graphs; colors
// come from a palette shared between the two sides so they stay comparable.
std::pair<std::vector<int>, std::vector<int>> refine_pair(const Graph& g,
                                                          const Graph& h) {
  int ng = g.order(), nh = h.order();
  auto initial = [](const Graph& gr, int v) {
    return std::pair<int, int>(gr.has_loop(v), gr.degree(v));
  };
  std::map<std::pair<int, int>, int> palette0;
  for (int v = 0; v < ng; ++v) palette0[initial(g, v)];
  for (int v = 0; v < nh; ++v) palette0[initial(h, v)];
  int next = 0;
  for (auto& [k, id] : palette0) id = next++;

  std::vector<int> cg(ng), ch(nh);
  for (int v = 0; v < ng; ++v) cg[v] = palette0.at(initial(g, v));
  for (int v = 0; v < nh; ++v) ch[v] = palette0.at(initial(h, v));

  int ncolors = next;
  for (;;) {
    using Sig = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& gr, const std::vector<int>& c, int v) {
      std::vector<int> nb;
      gr.row(v).for_each([&](int w) { nb.push_back(c[w]); });
      std::sort(nb.begin(), nb.end());
      return Sig(c[v], std::move(nb));
    };
    std::map<Sig, int> palette;
    std::vector<Sig> sg(ng), sh(nh);
    for (int v = 0; v < ng; ++v) palette[sg[v] = signature(g, cg, v)];
    for (int v = 0; v < nh; ++v) palette[sh[v] = signature(h, ch, v)];
    int id = 0;
    for (auto& [k, val] : palette) val = id++;
    for (int v = 0; v < ng; ++v) cg[v] = palette.at(sg[v]);
    for (int v = 0; v < nh; ++v) ch[v] = palette.at(sh[v]);
    if (id == ncolors) break;
    ncolors = id;
  }
  return {cg, ch};
}

// Backtracking search for adjacency-preserving bijections g -> h extending
// a pinned partial map. Candidate sets are bitsets pruned by color classes
// and by forward checking against every bound vertex.
class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<int> cg,
            std::vector<int> ch)
      : g_(g), h_(h), n_(g.order()), map_(n_, -1) {
    Bitset full(n_);
    for (int v = 0; v < n_; ++v) full.set(v);
    comp_rows_.reserve(n_);
    for (int w = 0; w < n_; ++w) {
      Bitset c = full;
      c.and_not(h.row(w));
      comp_rows_.push_back(std::move(c));
    }
    cand_.assign(n_, Bitset(n_));
    for (int v = 0; v < n_; ++v)
      for (int w = 0; w < n_; ++w)
        if (cg[v] == ch[w]) cand_[v].set(w);
  }

  const Bitset& candidates(int v) const { return cand_[v]; }

  // Binds v -> w with propagation. Returns false (state unchanged) on
  // contradiction.
  bool push(int v, int w) {
    if (map_[v] >= 0 || !cand_[v].test(w)) return false;
    Frame f{v, cand_};
    map_[v] = w;
    ++bound_;
    bool ok = true;
    for (int u = 0; u < n_ && ok; ++u) {
      if (map_[u] >= 0 || u == v) continue;
      cand_[u] &= g_.adjacent(u, v) ? h_.row(w) : comp_rows_[w];
      cand_[u].reset(w);
      if (cand_[u].none()) ok = false;
    }
    if (!ok) {
      map_[v] = -1;
      --bound_;
      cand_ = std::move(f.cand);
      return false;
    }
    stack_.push_back(std::move(f));
    return true;
  }

  void pop() {
    Frame& f = stack_.back();
    map_[f.v] = -1;
    --bound_;
    cand_ = std::move(f.cand);
    stack_.pop_back();
  }

  // First completion of the current partial map, in deterministic order;
  // the search state is restored before returning.
  std::optional<Permutation> complete() {
    if (bound_ == n_) return Permutation(map_);
    int v = -1, best = n_ + 1;
    for (int u = 0; u < n_; ++u) {
      if (map_[u] >= 0) continue;
      int c = cand_[u].count();
      if (c < best) {
        best = c;
        v = u;
      }
    }
    std::vector<int> ws = cand_[v].to_vector();
    for (int w : ws) {
      if (!push(v, w)) continue;
      auto r = complete();
      pop();
      if (r) return r;
    }
    return std::nullopt;
  }

 private:
  struct Frame {
    int v;
    std::vector<Bitset> cand;
  };
  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> map_;
  int bound_ = 0;
  std::vector<Bitset> cand_;
  std::vector<Bitset> comp_rows_;
  std::vector<Frame> stack_;
};

}  // namespace

std::pair<std::vector<int>, std::vector<int>> joint_refinement_colors(
    const Graph& g, const Graph& h) {
  return refine_pair(g, h);
}

std::vector<int> refinement_colors(const Graph& g) {
  return refine_pair(g, Graph(0)).first;
}

PermGroup automorphism_group(const Graph& g) {
  int n = g.order();
  if (n == 0) return PermGroup::trivial(0);
  std::vector<int> colors = refinement_colors(g);
  IsoSearch search(g, g, colors, colors);

  std::vector<PermGroup::Level> levels;
  std::vector<Permutation> strong;
  // Stabilizer chain along the base 0,1,...,n-1: at each vertex v, find one
  // coset representative per reachable image while the earlier vertices
  // stay pointwise fixed. Levels with a trivial orbit are dropped.
  for (int v = 0; v < n; ++v) {
    PermGroup::Level lv;
    lv.base = v;
    lv.transversal.emplace(v, Permutation::identity(n));
    std::vector<int> ws = search.candidates(v).to_vector();
    std::vector<Permutation> reps;
    for (int w : ws) {
      if (w == v) continue;
      if (!search.push(v, w)) continue;
      auto rep = search.complete();
      search.pop();
      if (rep) {
        lv.transversal.emplace(w, *rep);
        reps.push_back(std::move(*rep));
      }
    }
    if (lv.transversal.size() > 1) {
      levels.push_back(std::move(lv));
      for (auto& r : reps) strong.push_back(std::move(r));
    }
    bool ok = search.push(v, v);
    assert(ok);
    (void)ok;
  }
  return PermGroup::from_chain(n, std::move(levels), std::move(strong));
}

bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& p) {
  if (g.order() != h.order() || p.degree() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(p(u), p(v))) return false;
  return true;
}

std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() == 0) return Permutation::identity(0);
  if (g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count())
    return std::nullopt;
  auto [cg, ch] = joint_refinement_colors(g, h);
  {
    std::vector<int> a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  IsoSearch search(g, h, cg, ch);
  return search.complete();
}

CanonicalForm canonical_form(const Graph& g) {
  int n = g.order();
  if (n > 16) throw CapExceeded("canonical_form capped at 16 vertices");
  std::size_t len = std::size_t(n) * (n + 1) / 2;
  CanonicalForm best(len, 0xFF);
  std::vector<int> colors = refinement_colors(g);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(colors[a], a) < std::pair(colors[b], b);
  });

  std::vector<int> seq;
  std::vector<char> used(n, 0);
  // Invariant: the emitted prefix equals best's prefix on entry.
  auto dfs = [&](auto&& self, int k, std::size_t off) -> void {
    if (k == n) return;
    for (int x : order) {
      if (used[x]) continue;
      CanonicalForm seg(k + 1);
      for (int j = 0; j < k; ++j) seg[j] = g.adjacent(x, seq[j]) ? 1 : 0;
      seg[k] = g.has_loop(x) ? 1 : 0;
      int cmp = 0;
      for (int j = 0; j <= k && cmp == 0; ++j)
        cmp = int(seg[j]) - int(best[off + j]);
      if (cmp > 0) continue;
      if (cmp < 0) {
        std::copy(seg.begin(), seg.end(), best.begin() + off);
        std::fill(best.begin() + off + k + 1, best.end(), 0xFF);
      }
      used[x] = 1;
      seq.push_back(x);
      self(self, k + 1, off + k + 1);
      seq.pop_back();
      used[x] = 0;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

}  // namespace prodstab
