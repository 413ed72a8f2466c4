#include "prodstab/factorization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "prodstab/aut.hpp"
#include "prodstab/errors.hpp"
#include "prodstab/products.hpp"

namespace prodstab {

namespace {

constexpr int kCartesianCap = 24;
constexpr int kDirectCap = 20;
constexpr int kCycleCap = 48;

std::vector<int> bfs_order(const Graph& g) {
  int n = g.order();
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      g.row(order[head]).for_each([&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      });
    }
  }
  return order;
}

// ---------------------------------------------------------------- Cartesian

// Assignment search for g = left □ right with |left| = m, |right| = d.
// Every vertex gets a cell (p,l); an edge must keep one coordinate fixed,
// and within-row / within-column adjacency must agree with a single shared
// quotient pattern. Fresh class indices are allocated in first-use order,
// which quotients out relabelings of the factors.
class CartesianSplitSearch {
 public:
  CartesianSplitSearch(const Graph& g, int m, int d)
      : g_(g),
        n_(g.order()),
        m_(m),
        d_(d),
        order_(bfs_order(g)),
        p_of_(n_, -1),
        l_of_(n_, -1),
        cell_used_(m, std::vector<char>(d, 0)),
        row_adj_(m, std::vector<char>(m, -1)),
        col_adj_(d, std::vector<char>(d, -1)) {}

  struct Split {
    std::vector<int> p_of, l_of;
    Graph left, right;
  };

  std::optional<Split> find() {
    found_.reset();
    rec(0, 0, 0);
    return found_;
  }

 private:
  bool assign(int x, int p, int l, std::vector<std::pair<char*, char>>& undo) {
    for (int k = 0; k < n_; ++k) {
      int y = order_[k];
      if (p_of_[y] < 0 || y == x) continue;
      bool pe = (p_of_[y] == p), le = (l_of_[y] == l);
      bool adj = g_.adjacent(x, y);
      if (!pe && !le) {
        if (adj) return false;
        continue;
      }
      char* slot = pe ? &col_adj_[l][l_of_[y]] : &row_adj_[p][p_of_[y]];
      char* mirror = pe ? &col_adj_[l_of_[y]][l] : &row_adj_[p_of_[y]][p];
      char want = adj ? 1 : 0;
      if (*slot == -1) {
        undo.emplace_back(slot, *slot);
        *slot = want;
        if (mirror != slot) {
          undo.emplace_back(mirror, *mirror);
          *mirror = want;
        }
      } else if (*slot != want) {
        return false;
      }
    }
    return true;
  }

  void rec(int k, int pmax, int lmax) {
    if (found_) return;
    if (k == n_) {
      emit();
      return;
    }
    int x = order_[k];
    for (int p = 0; p <= std::min(pmax, m_ - 1); ++p) {
      for (int l = 0; l <= std::min(lmax, d_ - 1); ++l) {
        if (cell_used_[p][l]) continue;
        // at most one brand-new coordinate per step keeps growth canonical
        if (p == pmax && l == lmax && k > 0) continue;
        std::vector<std::pair<char*, char>> undo;
        p_of_[x] = p;
        l_of_[x] = l;
        cell_used_[p][l] = 1;
        if (assign(x, p, l, undo))
          rec(k + 1, std::max(pmax, p + 1), std::max(lmax, l + 1));
        for (auto& [slot, old] : undo) *slot = old;
        cell_used_[p][l] = 0;
        p_of_[x] = -1;
        l_of_[x] = -1;
        if (found_) return;
      }
    }
  }

  void emit() {
    // loops: a product vertex is looped iff its row or column is; the
    // maximal consistent flag assignment is the only candidate
    std::vector<char> row_loop(m_, 1), col_loop(d_, 1);
    for (int v = 0; v < n_; ++v) {
      if (!g_.has_loop(v)) {
        row_loop[p_of_[v]] = 0;
        col_loop[l_of_[v]] = 0;
      }
    }
    for (int v = 0; v < n_; ++v)
      if (g_.has_loop(v) != (row_loop[p_of_[v]] || col_loop[l_of_[v]])) return;

    Graph left(m_), right(d_);
    for (int a = 0; a < m_; ++a) {
      if (row_loop[a]) left.add_edge(a, a);
      for (int b = a + 1; b < m_; ++b)
        if (row_adj_[a][b] == 1) left.add_edge(a, b);
    }
    for (int a = 0; a < d_; ++a) {
      if (col_loop[a]) right.add_edge(a, a);
      for (int b = a + 1; b < d_; ++b)
        if (col_adj_[a][b] == 1) right.add_edge(a, b);
    }
    // full verification against the Cartesian adjacency rule
    for (int x = 0; x < n_; ++x)
      for (int y = x; y < n_; ++y) {
        bool pe = p_of_[x] == p_of_[y], le = l_of_[x] == l_of_[y];
        bool want = (pe && right.adjacent(l_of_[x], l_of_[y])) ||
                    (le && left.adjacent(p_of_[x], p_of_[y]));
        if (g_.adjacent(x, y) != want) return;
      }
    found_ = Split{p_of_, l_of_, std::move(left), std::move(right)};
  }

  const Graph& g_;
  int n_, m_, d_;
  std::vector<int> order_;
  std::vector<int> p_of_, l_of_;
  std::vector<std::vector<char>> cell_used_;
  std::vector<std::vector<char>> row_adj_, col_adj_;
  std::optional<Split> found_;
};

std::optional<CartesianSplitSearch::Split> find_cartesian_split(const Graph& g,
                                                                int d) {
  CartesianSplitSearch search(g, g.order() / d, d);
  return search.find();
}

void factorize_rec(const Graph& g, std::vector<Graph>& primes) {
  int n = g.order();
  for (int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    if (auto split = find_cartesian_split(g, d)) {
      factorize_rec(split->left, primes);
      factorize_rec(split->right, primes);
      return;
    }
  }
  primes.push_back(g);
}

// ------------------------------------------------------------------- direct

struct DirectSearchOptions {
  bool cols_independent = false;  // forbid edges inside column classes
  bool cycle_prune = false;       // no vertex may see 3+ neighbors in a row
};

// Assignment search for g = left x right with |right| = d. Quotient edges
// are forced monotonically by assigned edges; assigned non-edges whose both
// quotient pairs become forced kill the branch. Class indices grow in
// first-use order.
class DirectSplitSearch {
 public:
  DirectSplitSearch(const Graph& g, int d, DirectSearchOptions opt)
      : g_(g),
        n_(g.order()),
        m_(g.order() / d),
        d_(d),
        opt_(opt),
        order_(bfs_order(g)),
        p_of_(n_, -1),
        l_of_(n_, -1),
        cell_used_(m_, std::vector<char>(d, 0)),
        p_edge_(m_, std::vector<char>(m_, 0)),
        l_edge_(d, std::vector<char>(d, 0)),
        row_seen_(n_, std::vector<int>(m_, 0)) {}

  void run(const std::function<bool(const DirectDecomposition&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    rec(0, 0, 0);
  }

 private:
  struct Undo {
    std::vector<std::pair<char*, char>> edges;
    std::vector<std::pair<int, int>> counts;  // (vertex, row)
  };

  bool assign(int x, int p, int l, Undo& undo) {
    for (int k = 0; k < n_; ++k) {
      int y = order_[k];
      if (p_of_[y] < 0 || y == x) continue;
      if (!g_.adjacent(x, y)) continue;
      int py = p_of_[y], ly = l_of_[y];
      if (opt_.cols_independent && ly == l) return false;
      if (!p_edge_[p][py]) {
        undo.edges.emplace_back(&p_edge_[p][py], 0);
        p_edge_[p][py] = 1;
        if (py != p) {
          undo.edges.emplace_back(&p_edge_[py][p], 0);
          p_edge_[py][p] = 1;
        }
      }
      if (!l_edge_[l][ly]) {
        undo.edges.emplace_back(&l_edge_[l][ly], 0);
        l_edge_[l][ly] = 1;
        if (ly != l) {
          undo.edges.emplace_back(&l_edge_[ly][l], 0);
          l_edge_[ly][l] = 1;
        }
      }
      if (opt_.cycle_prune) {
        undo.counts.emplace_back(x, py);
        undo.counts.emplace_back(y, p);
        if (++row_seen_[x][py] > 2 || ++row_seen_[y][p] > 2) return false;
      }
    }
    // a non-edge with both quotient pairs forced contradicts the product rule
    for (int a = 0; a < n_; ++a) {
      int xa = order_[a];
      if (p_of_[xa] < 0) continue;
      for (int b = a; b < n_; ++b) {
        int xb = order_[b];
        if (p_of_[xb] < 0) continue;
        if (g_.adjacent(xa, xb)) continue;
        if (p_edge_[p_of_[xa]][p_of_[xb]] && l_edge_[l_of_[xa]][l_of_[xb]])
          return false;
      }
    }
    return true;
  }

  void undo_assign(Undo& undo) {
    for (auto& [slot, old] : undo.edges) *slot = old;
    for (auto& [v, r] : undo.counts) --row_seen_[v][r];
  }

  void rec(int k, int pmax, int lmax) {
    if (stop_) return;
    if (k == n_) {
      emit();
      return;
    }
    int x = order_[k];
    // unlike the Cartesian case, direct-product neighbors differ in both
    // coordinates, so a vertex may legitimately open a row and a column
    for (int p = 0; p <= std::min(pmax, m_ - 1); ++p) {
      for (int l = 0; l <= std::min(lmax, d_ - 1); ++l) {
        if (cell_used_[p][l]) continue;
        Undo undo;
        p_of_[x] = p;
        l_of_[x] = l;
        cell_used_[p][l] = 1;
        if (assign(x, p, l, undo))
          rec(k + 1, std::max(pmax, p + 1), std::max(lmax, l + 1));
        undo_assign(undo);
        cell_used_[p][l] = 0;
        p_of_[x] = -1;
        l_of_[x] = -1;
        if (stop_) return;
      }
    }
  }

  void emit() {
    // leaf check: the forced quotients reproduce g exactly
    for (int x = 0; x < n_; ++x)
      for (int y = x; y < n_; ++y) {
        bool want =
            p_edge_[p_of_[x]][p_of_[y]] && l_edge_[l_of_[x]][l_of_[y]];
        if (g_.adjacent(x, y) != bool(want)) return;
      }
    if (opt_.cycle_prune && !cycle_counts_hold()) return;

    DirectDecomposition dec;
    dec.row_of = p_of_;
    dec.col_of = l_of_;
    dec.part_p.classes.assign(m_, {});
    dec.part_l.classes.assign(d_, {});
    for (int v = 0; v < n_; ++v) {
      dec.part_p.classes[p_of_[v]].push_back(v);
      dec.part_l.classes[l_of_[v]].push_back(v);
    }
    Graph left(m_), right(d_);
    for (int a = 0; a < m_; ++a)
      for (int b = a; b < m_; ++b)
        if (p_edge_[a][b]) left.add_edge(a, b);
    for (int a = 0; a < d_; ++a)
      for (int b = a; b < d_; ++b)
        if (l_edge_[a][b]) right.add_edge(a, b);
    dec.left_factor = std::move(left);
    dec.right_factor = std::move(right);
    if (!(*visit_)(dec)) stop_ = true;
  }

  // |N(x) ∩ row b| must be a constant in {0,2} over each row a
  bool cycle_counts_hold() const {
    for (int a = 0; a < m_; ++a)
      for (int b = 0; b < m_; ++b) {
        int want = -1;
        for (int v = 0; v < n_; ++v) {
          if (p_of_[v] != a) continue;
          int c = 0;
          g_.row(v).for_each([&](int w) { c += (p_of_[w] == b); });
          if (want == -1) want = c;
          if (c != want || (c != 0 && c != 2)) return false;
        }
      }
    return true;
  }

  const Graph& g_;
  int n_, m_, d_;
  DirectSearchOptions opt_;
  std::vector<int> order_;
  std::vector<int> p_of_, l_of_;
  std::vector<std::vector<char>> cell_used_;
  std::vector<std::vector<char>> p_edge_, l_edge_;
  std::vector<std::vector<int>> row_seen_;
  const std::function<bool(const DirectDecomposition&)>* visit_ = nullptr;
  bool stop_ = false;
};

void check_direct_pre(const Graph& g, int d, int cap) {
  if (g.order() > cap)
    throw CapExceeded("direct factor search capped at " + std::to_string(cap) +
                      " vertices");
  if (d <= 1 || d >= g.order() || g.order() % d != 0)
    throw std::invalid_argument(
        "direct factor search: need a proper divisor 1 < d < n");
}

// All right factors of proper decompositions of g, plus g itself, deduped
// by canonical form. Any common factor of two graphs shows up here for the
// smaller of them.
std::vector<Graph> direct_factor_candidates(const Graph& g) {
  std::vector<Graph> out;
  std::map<CanonicalForm, bool> seen;
  int n = g.order();
  for (int d = 2; d < n; ++d) {
    if (n % d != 0) continue;
    enumerate_direct_decompositions(g, d, [&](const DirectDecomposition& dec) {
      auto key = canonical_form(dec.right_factor);
      if (!seen.count(key)) {
        seen[key] = true;
        out.push_back(dec.right_factor);
      }
      return true;
    });
  }
  if (n > 1) out.push_back(g);  // improper: order-1 looped cofactor
  return out;
}

// Does `target` occur as a direct factor of g (improper allowed)?
bool has_direct_factor(const Graph& g, const Graph& target) {
  int n = g.order(), t = target.order();
  if (t > n || n % t != 0) return false;
  if (t == n) return are_isomorphic(g, target).has_value();
  bool found = false;
  enumerate_direct_decompositions(g, t, [&](const DirectDecomposition& dec) {
    if (are_isomorphic(dec.right_factor, target)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

FactorizationResult cartesian_prime_factorization(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument(
        "cartesian_prime_factorization: input must be connected");
  if (g.order() > kCartesianCap)
    throw CapExceeded("cartesian factorization capped at " +
                      std::to_string(kCartesianCap) + " vertices");
  FactorizationResult res;
  if (g.order() == 1) {
    res.certified = true;  // units have the empty factorization
    return res;
  }
  std::vector<Graph> primes;
  factorize_rec(g, primes);
  std::stable_sort(primes.begin(), primes.end(),
                   [](const Graph& a, const Graph& b) {
                     if (a.order() != b.order()) return a.order() < b.order();
                     return canonical_form(a) < canonical_form(b);
                   });
  for (auto& f : primes) {
    if (!res.factors.empty() &&
        res.factors.back().first.order() == f.order() &&
        are_isomorphic(res.factors.back().first, f)) {
      ++res.factors.back().second;
    } else {
      res.factors.emplace_back(f, 1);
    }
  }
  // certificate: the product of the factors is isomorphic to the input
  Graph rebuilt = res.factors[0].first;
  bool first = true;
  for (auto& [f, mult] : res.factors)
    for (int t = 0; t < mult; ++t) {
      if (first) {
        first = false;
        continue;
      }
      rebuilt = cartesian_product(rebuilt, f).graph;
    }
  res.certified = are_isomorphic(rebuilt, g).has_value();
  if (!res.certified)
    throw std::logic_error(
        "cartesian factorization produced a non-matching factor list");
  return res;
}

bool is_cartesian_prime(const Graph& g) {
  if (g.order() < 2)
    throw std::invalid_argument("is_cartesian_prime: undefined at order 1");
  auto f = cartesian_prime_factorization(g);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

bool are_cartesian_coprime(const Graph& g, const Graph& h) {
  if (!is_connected(g) || !is_connected(h))
    throw std::invalid_argument(
        "are_cartesian_coprime: inputs must be connected");
  auto fg = cartesian_prime_factorization(g);
  auto fh = cartesian_prime_factorization(h);
  for (auto& [a, ma] : fg.factors)
    for (auto& [b, mb] : fh.factors)
      if (a.order() == b.order() && are_isomorphic(a, b)) return false;
  return true;
}

bool coprime_to_components(const Graph& g, const Graph& h) {
  if (!is_connected(g))
    throw std::invalid_argument("coprime_to_components: g must be connected");
  for (auto& comp : connected_components(h)) {
    if (comp.size() == 1) continue;  // units
    if (!are_cartesian_coprime(g, induced_subgraph(h, comp))) return false;
  }
  return true;
}

std::optional<DirectDecomposition> direct_factor_search(const Graph& g,
                                                        int d) {
  check_direct_pre(g, d, kDirectCap);
  std::optional<DirectDecomposition> out;
  DirectSplitSearch search(g, d, {});
  search.run([&](const DirectDecomposition& dec) {
    out = dec;
    return false;
  });
  return out;
}

void enumerate_direct_decompositions(
    const Graph& g, int d,
    const std::function<bool(const DirectDecomposition&)>& visit) {
  check_direct_pre(g, d, kDirectCap);
  DirectSplitSearch search(g, d, {});
  search.run(visit);
}

bool are_direct_coprime(const Graph& g, const Graph& h) {
  if (g.order() > kDirectCap || h.order() > kDirectCap)
    throw CapExceeded("direct coprimality capped at " +
                      std::to_string(kDirectCap) + " vertices");
  const Graph& small = g.order() <= h.order() ? g : h;
  const Graph& big = g.order() <= h.order() ? h : g;
  for (const Graph& delta : direct_factor_candidates(small))
    if (has_direct_factor(big, delta)) return false;
  return true;
}

std::optional<DirectDecomposition> has_cycle_direct_factor(const Graph& g,
                                                           int n) {
  if (n < 3) throw std::invalid_argument("has_cycle_direct_factor: need n >= 3");
  if (g.order() > kCycleCap)
    throw CapExceeded("cycle factor search capped at " +
                      std::to_string(kCycleCap) + " vertices");
  if (!is_connected(g))
    throw std::invalid_argument("has_cycle_direct_factor: g must be connected");
  if (g.order() % n != 0)
    throw std::invalid_argument(
        "has_cycle_direct_factor: n does not divide the order");
  if (g.order() / n < 2) return std::nullopt;  // only proper decompositions

  std::optional<DirectDecomposition> out;
  DirectSplitSearch search(g, n,
                           {.cols_independent = true, .cycle_prune = true});
  search.run([&](const DirectDecomposition& dec) {
    out = dec;
    return false;
  });
  if (out && !are_isomorphic(out->right_factor, cycle(n)))
    throw std::logic_error(
        "cycle factor criterion produced a non-cycle right factor");
  return out;
}

}  // namespace prodstab
