#ifndef PRODSTAB_AUT_HPP
#define PRODSTAB_AUT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "prodstab/graph.hpp"
#include "prodstab/perm.hpp"
#include "prodstab/perm_group.hpp"

namespace prodstab {

// Stable vertex coloring under iterated degree-and-loop refinement; equal
// colors are a necessary condition for vertices to be related by an
// isomorphism. Colors of g and h are drawn from a shared palette.
std::vector<int> refinement_colors(const Graph& g);
std::pair<std::vector<int>, std::vector<int>> joint_refinement_colors(
    const Graph& g, const Graph& h);

// Full automorphism group, computed by individualization backtracking along
// the vertex order 0..n-1. Loops are respected (a looped vertex can only map
// to a looped vertex). Deterministic: ties are broken by smallest candidate
// vertex id.
PermGroup automorphism_group(const Graph& g);

// First relabeling carrying g onto h in the deterministic search order,
// or absent.
std::optional<Permutation> are_isomorphic(const Graph& g, const Graph& h);

// True iff p maps g's adjacency relation onto h's exactly.
bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& p);

// Canonical adjacency string: the lexicographically least concatenation,
// over all vertex orderings, of each vertex's adjacency bits to its
// predecessors followed by its loop bit. Equal strings iff isomorphic.
// Intended for small graphs (factor lists, dedup keys); capped at 16
// vertices.
using CanonicalForm = std::vector<std::uint8_t>;
CanonicalForm canonical_form(const Graph& g);

}  // namespace prodstab

#endif
