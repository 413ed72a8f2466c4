#ifndef PRODSTAB_SKELETON_HPP
#define PRODSTAB_SKELETON_HPP

#include <utility>
#include <vector>

#include "prodstab/graph.hpp"

namespace prodstab {

// Boolean square: loopless graph joining distinct vertices with a common
// neighbor (loops feed into neighborhoods, so a loop at u makes u and its
// neighbors share u).
Graph boolean_square(const Graph& g);

// Dispensability of the boolean-square edge {u,v} with respect to g: some
// witness w satisfies both strict-inclusion conditions. The witness ranges
// over all of V(g); u and v themselves can never satisfy the conditions.
// Rejects pairs that are not edges of B(g).
bool is_dispensable(const Graph& g, int u, int v);

// B(g) minus all dispensable edges, judged against the original g and
// removed in one pass. Isolated vertices stay isolated.
Graph cartesian_skeleton(const Graph& g);

// Connected components of S(g) as (vertex set, induced subgraph) pairs,
// ordered by smallest vertex.
std::vector<std::pair<std::vector<int>, Graph>> skeleton_components(
    const Graph& g);

}  // namespace prodstab

#endif
