#ifndef PRODSTAB_PRODUCTS_HPP
#define PRODSTAB_PRODUCTS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "prodstab/graph.hpp"
#include "prodstab/perm.hpp"

namespace prodstab {

// Row-major bookkeeping for a product on V(left) x V(right):
// (u,i) <-> u*n_right + i. Rows are the classes {u} x V(right), columns the
// classes V(left) x {i}.
struct ProductIndex {
  int n_left = 0;
  int n_right = 0;

  int size() const { return n_left * n_right; }
  int encode(int u, int i) const { return u * n_right + i; }
  std::pair<int, int> decode(int x) const {
    return {x / n_right, x % n_right};
  }
  int row_of(int x) const { return x / n_right; }
  int col_of(int x) const { return x % n_right; }
};

struct ProductResult {
  Graph graph;
  ProductIndex index;
};

// (u,i) ~ (v,j) iff u ~ v and i ~ j. A loop at u combines with an edge
// {i,j} to give the product edge {(u,i),(u,j)}; two loops give a loop.
ProductResult direct_product(const Graph& g, const Graph& h);

// (u,i) ~ (v,j) iff u = v and i ~ j, or i = j and u ~ v.
ProductResult cartesian_product(const Graph& g, const Graph& h);

// k-fold Cartesian power with tuple bookkeeping. Tuples are encoded
// row-major with the last coordinate fastest, matching the iterated
// left-associated cartesian_product.
struct PowerIndex {
  int base_n = 0;
  int k = 0;

  int size() const;
  int encode(const std::vector<int>& tuple) const;
  std::vector<int> decode(int x) const;
};

struct PowerResult {
  Graph graph;
  PowerIndex index;
};

PowerResult cartesian_power(const Graph& g, int k);  // k >= 1

// A row mixer maps some row class onto a set that is not a row class.
bool is_row_mixer(const Permutation& p, const ProductIndex& idx);
bool is_col_mixer(const Permutation& p, const ProductIndex& idx);

// The unique pair (a,b) with p(u,i) = (a(u),b(i)) when p preserves both
// partitions; absent otherwise. Exactly one of "componentwise" and
// "row or column mixer" holds for any permutation of the index.
std::optional<std::pair<Permutation, Permutation>> is_componentwise(
    const Permutation& p, const ProductIndex& idx);

// Embedding of a factor pair as a permutation of the product.
Permutation componentwise_perm(const Permutation& a, const Permutation& b,
                               const ProductIndex& idx);

}  // namespace prodstab

#endif
