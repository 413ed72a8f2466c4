#ifndef PRODSTAB_ENUMERATE_HPP
#define PRODSTAB_ENUMERATE_HPP

#include <optional>
#include <vector>

#include "prodstab/graph.hpp"

namespace prodstab {

struct EnumerateOptions {
  bool loops = false;  // widen the universe to graphs with loops
  std::optional<bool> connected;
  std::optional<bool> bipartite;
  std::optional<bool> twin_free;
};

// One representative per isomorphism class of graphs on exactly n vertices
// matching the filters. Representatives are the minimal adjacency masks of
// their orbits under vertex relabeling, so output order is deterministic.
// Caps: n <= 7 loopless, n <= 5 with loops.
std::vector<Graph> enumerate_graphs(int n, const EnumerateOptions& opt = {});

}  // namespace prodstab

#endif
