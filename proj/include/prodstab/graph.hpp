#ifndef PRODSTAB_GRAPH_HPP
#define PRODSTAB_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "prodstab/bitset.hpp"

namespace prodstab {

// Finite undirected graph on vertices 0..n-1, loops allowed, no multi-edges.
// The adjacency relation is kept symmetric by construction; a set diagonal
// bit encodes a loop, and a loop puts the vertex into its own neighborhood.
// Values are treated as immutable once built and are safe to share across
// threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

  int order() const { return n_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }

  void add_edge(int u, int v) {
    adj_[u].set(v);
    adj_[v].set(u);
  }
  void remove_edge(int u, int v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
  }

  // Neighborhood row; includes v itself exactly when v has a loop.
  const Bitset& row(int v) const { return adj_[v]; }

  // Loops count once.
  int degree(int v) const { return adj_[v].count(); }

  bool has_loop(int v) const { return adj_[v].test(v); }
  bool has_any_loop() const {
    for (int v = 0; v < n_; ++v)
      if (has_loop(v)) return true;
    return false;
  }
  int loop_count() const {
    int c = 0;
    for (int v = 0; v < n_; ++v) c += has_loop(v);
    return c;
  }

  // Unordered edges, loops counted once.
  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v) + has_loop(v);
    return twice / 2;
  }

  // Sorted list of {u,v} with u <= v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<Bitset> adj_;
};

struct Bipartition {
  std::vector<int> part_u;  // contains vertex 0 of the lowest component
  std::vector<int> part_w;
};

// Standard families. All reject the empty graph.
Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1, loopless
// Vertex u ~ v iff (u - v) mod n lies in the connection set. The set is
// closed under negation by the constructor; residues ≡ 0 are rejected.
Graph circulant(int n, const std::vector<int>& connection);
Graph path(int n);  // n >= 1

Graph disjoint_union(const Graph& a, const Graph& b);

// Relabels verts[i] -> i and keeps the induced adjacency.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

std::vector<int> neighbors(const Graph& g, int v);

// Empty graph counts as not connected.
bool is_connected(const Graph& g);

// Vertex sets of connected components, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Absent iff the graph has an odd closed walk (a loop is one).
std::optional<Bipartition> is_bipartite(const Graph& g);

// Open neighborhoods: N(u) is the adjacency row, so a loop at u puts
// u into N(u).
bool is_twin_free(const Graph& g);

}  // namespace prodstab

#endif
