#ifndef PRODSTAB_PERM_GROUP_HPP
#define PRODSTAB_PERM_GROUP_HPP

#include <map>
#include <vector>

#include "prodstab/bitset.hpp"
#include "prodstab/perm.hpp"

namespace prodstab {

// Permutation group with a base and strong generating set. Orders and
// membership are exact; nothing is randomized, so identical inputs always
// produce identical chains, element orders and witnesses. Groups are
// immutable once constructed and safe to share across threads.
class PermGroup {
 public:
  struct Level {
    int base = -1;
    // orbit point -> u with base^u = point; always maps base to identity
    std::map<int, Permutation> transversal;
  };

  PermGroup() = default;
  static PermGroup trivial(int degree);
  static PermGroup from_generators(int degree, std::vector<Permutation> gens);
  // Trusted constructor for chains built elsewhere (automorphism search).
  // strong_gens[i] must fix every base point of levels before level_of[i].
  static PermGroup from_chain(int degree, std::vector<Level> levels,
                              std::vector<Permutation> strong_gens);

  int degree() const { return degree_; }
  bool is_trivial() const { return levels_.empty(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<Level>& chain() const { return levels_; }

  // Product of transversal sizes. Throws CapExceeded if it would not fit
  // in 64 bits.
  unsigned long long order() const;

  bool contains(const Permutation& p) const;

  // Streams every element exactly once in a fixed deterministic order.
  // The visitor returns false to stop; the function returns false iff
  // the walk was stopped.
  template <class F>
  bool for_each_element(F&& visit) const {
    return walk(0, Permutation::identity(degree_), visit);
  }

  // Materializes all elements; refuses when order() exceeds the cap.
  std::vector<Permutation> elements(unsigned long long cap) const;

  // Exact subgroup {g : set^g = set}, found by backtracking over the chain
  // with base-point set-membership pruning.
  PermGroup setwise_stabilizer(const std::vector<int>& set) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> gens_;  // strong generating set, no identity
  std::vector<int> base_;
  std::vector<Level> levels_;

  void rebuild();  // deterministic Schreier-Sims over gens_
  void build_levels_from_base();
  // Reduces p through the chain starting at level `from`; returns the
  // residue and the level where reduction stopped (levels_.size() when the
  // whole chain was consumed).
  std::pair<Permutation, int> sift(Permutation p, int from) const;

  template <class F>
  bool walk(std::size_t i, const Permutation& tail, F&& visit) const {
    if (i == levels_.size()) return visit(tail);
    for (const auto& [x, u] : levels_[i].transversal)
      if (!walk(i + 1, compose(u, tail), visit)) return false;
    return true;
  }
};

// Exact group order (spec-facing alias).
unsigned long long group_order(const PermGroup& g);

}  // namespace prodstab

#endif
