#ifndef PRODSTAB_FACTORIZATION_HPP
#define PRODSTAB_FACTORIZATION_HPP

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "prodstab/graph.hpp"

namespace prodstab {

struct FactorizationResult {
  // Cartesian-prime factors with multiplicities, sorted by canonical form.
  std::vector<std::pair<Graph, int>> factors;
  // True when the Cartesian product of the listed factors was rebuilt and
  // checked isomorphic to the input.
  bool certified = false;
};

// Complete Cartesian-prime factorization of a connected graph, found by
// recursive two-factor search over the divisors of the order. Disconnected
// inputs are rejected; the cap is 24 vertices.
FactorizationResult cartesian_prime_factorization(const Graph& g);

// n >= 2 and connected required.
bool is_cartesian_prime(const Graph& g);

// No common Cartesian factor of order > 1; decided on prime factor
// multisets, which is valid for connected inputs.
bool are_cartesian_coprime(const Graph& g, const Graph& h);

// are_cartesian_coprime(g, c) for every connected component c of h.
// Order-1 components are Cartesian units and count as coprime.
bool coprime_to_components(const Graph& g, const Graph& h);

struct VertexPartition {
  std::vector<std::vector<int>> classes;
};

// Witness that g is a direct product: row classes part_p (one per left
// vertex), column classes part_l (one per right vertex), meeting in single
// cells, with the rebuilt quotient factors.
struct DirectDecomposition {
  VertexPartition part_p;  // |part_p| = |left|, classes of size |right|
  VertexPartition part_l;  // |part_l| = |right|, classes of size |left|
  Graph left_factor;
  Graph right_factor;
  std::vector<int> row_of;  // vertex -> index into part_p
  std::vector<int> col_of;  // vertex -> index into part_l
};

// Searches for a direct decomposition with right factor of order d
// (1 < d < n, d | n); cap 20 vertices. First witness in the deterministic
// search order, or absent.
std::optional<DirectDecomposition> direct_factor_search(const Graph& g, int d);

// Streams every decomposition at this divisor (each partition pair once);
// the callback returns false to stop early. Same preconditions as above.
void enumerate_direct_decompositions(
    const Graph& g, int d,
    const std::function<bool(const DirectDecomposition&)>& visit);

// No common direct factor of order > 1. A graph counts as a factor of
// itself (order-1 cofactor with a loop), which the definition requires.
bool are_direct_coprime(const Graph& g, const Graph& h);

// Decomposition g = left x C_n via the cycle-factor criterion: column
// classes independent, every row pair sees 0 or 2 neighbors per vertex.
// Proper decompositions only (left order >= 2). Cap 48 vertices; g must be
// connected.
std::optional<DirectDecomposition> has_cycle_direct_factor(const Graph& g,
                                                           int n);

}  // namespace prodstab

#endif
