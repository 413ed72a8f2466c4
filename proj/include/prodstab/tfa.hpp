#ifndef PRODSTAB_TFA_HPP
#define PRODSTAB_TFA_HPP

#include <optional>
#include <string>
#include <vector>

#include "prodstab/graph.hpp"
#include "prodstab/perm_group.hpp"
#include "prodstab/products.hpp"

namespace prodstab {

// Two-fold automorphism: (s,t) is an arc iff (s^alpha, t^beta) is. Arcs are
// ordered pairs of adjacent vertices, a loop contributing (v,v).
struct TfaPair {
  Permutation alpha, beta;

  bool is_diagonal() const { return alpha == beta; }
  bool operator==(const TfaPair&) const = default;
};

bool is_tfa(const Graph& g, const TfaPair& pair);

// The two-fold automorphism group of g, realized as the setwise stabilizer
// of V x {0} inside Aut(g x K2) and decoded through the two blocks. Pair
// products follow the componentwise rule, matching composition in the
// stabilizer.
class TfaGroup {
 public:
  TfaGroup() = default;
  TfaGroup(int n, PermGroup stabilizer);

  int graph_order() const { return n_; }
  unsigned long long order() const { return group_.order(); }
  const PermGroup& product_group() const { return group_; }

  TfaPair decode(const Permutation& stabilizer_element) const;
  std::vector<TfaPair> generator_pairs() const;

  // Streams every pair exactly once; visitor returns false to stop.
  template <class F>
  bool for_each_pair(F&& visit) const {
    return group_.for_each_element(
        [&](const Permutation& p) { return visit(decode(p)); });
  }

 private:
  int n_ = 0;
  PermGroup group_;  // degree 2n
};

TfaGroup tfa_group(const Graph& g);

// A witness with alpha != beta when one exists.
std::optional<TfaPair> has_nondiagonal_tfa(const Graph& g);

enum class Verdict { stable, unstable };
enum class DecisionMethod { mixer_scan, order_compare, tfa };

struct StabilityReport {
  Verdict verdict = Verdict::stable;
  DecisionMethod method = DecisionMethod::mixer_scan;
  unsigned long long aut_product = 0;
  unsigned long long aut_left = 0;
  unsigned long long aut_right = 0;
  ProductIndex index;
  // unstable only: an automorphism of the product that mixes a partition
  std::optional<Permutation> mixer_witness;

  bool stable() const { return verdict == Verdict::stable; }
};

// Stability of the pair (g, K2): the single-graph notion.
StabilityReport is_stable_graph(const Graph& g);

// Stability of (g, h): every generator of Aut(g x h) componentwise. The
// order identity |Aut(g x h)| = |Aut(g)| |Aut(h)| is cross-checked; a
// disagreement between the two routes throws.
StabilityReport is_stable_pair(const Graph& g, const Graph& h);

// Alternative deciders used for consistency checks.
bool stable_by_order(const Graph& g);
// Connected non-bipartite graphs only: stable iff no non-diagonal pair.
std::optional<bool> stable_by_tfa(const Graph& g);

struct NontrivialityReport {
  bool nontrivial = false;
  bool left_connected = false, right_connected = false;
  bool left_twin_free = false, right_twin_free = false;
  bool left_bipartite = false, right_bipartite = false;
  bool coprime = false;
  std::vector<std::string> reasons;  // one entry per failed clause
};

// Coprime connected twin-free graphs with exactly one side bipartite.
NontrivialityReport is_nontrivial_pair(const Graph& g, const Graph& h);

// For connected bipartite g: an automorphism interchanging the two parts,
// or absent. Found among the strong generators, which suffices because the
// part-preserving elements form a subgroup.
std::optional<Permutation> part_swap_automorphism(const Graph& g);

// The six restriction components of a two-fold automorphism of g x h
// promised by the skeleton-coprimality decomposition: alpha agrees with
// (alpha_plus, alpha0) on V x U and (alpha_minus, alpha0) on V x W, beta
// with (beta_plus, beta0) and (beta_minus, beta0).
struct TfaDecomposition {
  Permutation alpha_plus, alpha_minus, beta_plus, beta_minus;
  Permutation alpha0, beta0;
};

// Requires: g connected twin-free non-bipartite, h connected twin-free
// bipartite with a part-swapping automorphism, and S(g) Cartesian-coprime
// to each component of S(h). Absent means the extraction failed, which
// would falsify the decomposition claim for this instance.
std::optional<TfaDecomposition> tfa_decompose(const Graph& g, const Graph& h,
                                              const TfaPair& pair);

}  // namespace prodstab

#endif
