// Test-only oracles: independent brute-force routes used to pin expected
// values. Nothing here shares search code with the library.
#ifndef PRODSTAB_TESTS_ORACLES_HPP
#define PRODSTAB_TESTS_ORACLES_HPP

#include <vector>

#include "prodstab/graph.hpp"
#include "prodstab/perm.hpp"

namespace prodstab::oracles {

std::vector<Permutation> all_perms(int n);

// Exhaustive closure of a generating set under composition.
unsigned long long closure_order(int degree,
                                 const std::vector<Permutation>& gens);

// All automorphisms by filtering every permutation.
std::vector<Permutation> brute_automorphisms(const Graph& g);

// Count of pairs (alpha, beta) with (s,t) an arc iff (alpha s, beta t) is.
unsigned long long brute_tfa_pairs(const Graph& g);

// Does g admit a direct decomposition with right factor of order d?
// Tries every bijection onto [n/d] x [d] (vertex 0 pinned to the corner,
// which relabeling of the factors always allows).
bool brute_direct_split_exists(const Graph& g, int d);

// Number of isomorphism classes of graphs on n labeled vertices matching
// the filters, by canonicalizing every adjacency mask (min over all
// relabelings). Practical to n = 6 loopless, n = 5 with loops.
struct BruteFilter {
  bool loops = false;
  bool require_connected = false;
  bool require_twin_free = false;
};
int brute_class_count(int n, const BruteFilter& filter);

}  // namespace prodstab::oracles

#endif
