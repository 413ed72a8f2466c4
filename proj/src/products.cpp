#include "prodstab/products.hpp"

#include <stdexcept>

namespace prodstab {

namespace {

void require_nonempty(const Graph& g, const Graph& h, const char* who) {
  if (g.order() == 0 || h.order() == 0)
    throw std::invalid_argument(std::string(who) + ": empty factor");
}

void require_degree(const Permutation& p, const ProductIndex& idx) {
  if (p.degree() != idx.size())
    throw std::invalid_argument("mixer test: degree does not match index");
}

}  // namespace

ProductResult direct_product(const Graph& g, const Graph& h) {
  require_nonempty(g, h, "direct_product");
  ProductIndex idx{g.order(), h.order()};
  Graph p(idx.size());
  for (int a = 0; a < idx.size(); ++a) {
    auto [u, i] = idx.decode(a);
    for (int b = a; b < idx.size(); ++b) {
      auto [v, j] = idx.decode(b);
      if (g.adjacent(u, v) && h.adjacent(i, j)) p.add_edge(a, b);
    }
  }
  return {std::move(p), idx};
}

ProductResult cartesian_product(const Graph& g, const Graph& h) {
  require_nonempty(g, h, "cartesian_product");
  ProductIndex idx{g.order(), h.order()};
  Graph p(idx.size());
  for (int a = 0; a < idx.size(); ++a) {
    auto [u, i] = idx.decode(a);
    for (int b = a; b < idx.size(); ++b) {
      auto [v, j] = idx.decode(b);
      if ((u == v && h.adjacent(i, j)) || (i == j && g.adjacent(u, v)))
        p.add_edge(a, b);
    }
  }
  return {std::move(p), idx};
}

int PowerIndex::size() const {
  int s = 1;
  for (int t = 0; t < k; ++t) s *= base_n;
  return s;
}

int PowerIndex::encode(const std::vector<int>& tuple) const {
  int x = 0;
  for (int t = 0; t < k; ++t) x = x * base_n + tuple[t];
  return x;
}

std::vector<int> PowerIndex::decode(int x) const {
  std::vector<int> tuple(k);
  for (int t = k - 1; t >= 0; --t) {
    tuple[t] = x % base_n;
    x /= base_n;
  }
  return tuple;
}

PowerResult cartesian_power(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("cartesian_power: need k >= 1");
  if (g.order() == 0)
    throw std::invalid_argument("cartesian_power: empty base");
  Graph acc = g;
  for (int t = 1; t < k; ++t) acc = cartesian_product(acc, g).graph;
  return {std::move(acc), PowerIndex{g.order(), k}};
}

bool is_row_mixer(const Permutation& p, const ProductIndex& idx) {
  require_degree(p, idx);
  for (int u = 0; u < idx.n_left; ++u) {
    int r0 = idx.row_of(p(idx.encode(u, 0)));
    for (int i = 1; i < idx.n_right; ++i)
      if (idx.row_of(p(idx.encode(u, i))) != r0) return true;
  }
  return false;
}

bool is_col_mixer(const Permutation& p, const ProductIndex& idx) {
  require_degree(p, idx);
  for (int i = 0; i < idx.n_right; ++i) {
    int c0 = idx.col_of(p(idx.encode(0, i)));
    for (int u = 1; u < idx.n_left; ++u)
      if (idx.col_of(p(idx.encode(u, i))) != c0) return true;
  }
  return false;
}

std::optional<std::pair<Permutation, Permutation>> is_componentwise(
    const Permutation& p, const ProductIndex& idx) {
  require_degree(p, idx);
  if (is_row_mixer(p, idx) || is_col_mixer(p, idx)) return std::nullopt;
  std::vector<int> a(idx.n_left), b(idx.n_right);
  for (int u = 0; u < idx.n_left; ++u) a[u] = idx.row_of(p(idx.encode(u, 0)));
  for (int i = 0; i < idx.n_right; ++i) b[i] = idx.col_of(p(idx.encode(0, i)));
  return std::pair(Permutation(std::move(a)), Permutation(std::move(b)));
}

Permutation componentwise_perm(const Permutation& a, const Permutation& b,
                               const ProductIndex& idx) {
  if (a.degree() != idx.n_left || b.degree() != idx.n_right)
    throw std::invalid_argument("componentwise_perm: factor degree mismatch");
  std::vector<int> img(idx.size());
  for (int u = 0; u < idx.n_left; ++u)
    for (int i = 0; i < idx.n_right; ++i)
      img[idx.encode(u, i)] = idx.encode(a(u), b(i));
  return Permutation(std::move(img));
}

}  // namespace prodstab
