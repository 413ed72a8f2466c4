#include "prodstab/perm_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "prodstab/errors.hpp"

namespace prodstab {

namespace {

int smallest_moved_point(const Permutation& p) {
  for (int v = 0; v < p.degree(); ++v)
    if (p(v) != v) return v;
  return -1;
}

bool fixes_all(const Permutation& p, const std::vector<int>& points,
               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i)
    if (p(points[i]) != points[i]) return false;
  return true;
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  return g;
}

PermGroup PermGroup::from_generators(int degree,
                                     std::vector<Permutation> gens) {
  PermGroup g;
  g.degree_ = degree;
  for (auto& p : gens) {
    if (p.degree() != degree)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (!p.is_identity() &&
        std::find(g.gens_.begin(), g.gens_.end(), p) == g.gens_.end())
      g.gens_.push_back(std::move(p));
  }
  g.rebuild();
  return g;
}

PermGroup PermGroup::from_chain(int degree, std::vector<Level> levels,
                                std::vector<Permutation> strong_gens) {
  PermGroup g;
  g.degree_ = degree;
  g.levels_ = std::move(levels);
  g.gens_ = std::move(strong_gens);
  for (const auto& lv : g.levels_) g.base_.push_back(lv.base);
  return g;
}

void PermGroup::build_levels_from_base() {
  levels_.clear();
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Level lv;
    lv.base = base_[i];
    lv.transversal.emplace(lv.base, Permutation::identity(degree_));
    // orbit of base under the generators fixing base_[0..i-1]
    std::vector<int> queue{lv.base};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      const Permutation& ux = lv.transversal.at(x);
      for (const auto& s : gens_) {
        if (!fixes_all(s, base_, i)) continue;
        int y = s(x);
        if (!lv.transversal.count(y)) {
          lv.transversal.emplace(y, compose(ux, s));
          queue.push_back(y);
        }
      }
    }
    levels_.push_back(std::move(lv));
  }
}

std::pair<Permutation, int> PermGroup::sift(Permutation p, int from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    int x = p(levels_[i].base);
    auto it = levels_[i].transversal.find(x);
    if (it == levels_[i].transversal.end()) return {std::move(p), int(i)};
    p = compose(p, it->second.inverse());
  }
  return {std::move(p), int(levels_.size())};
}

void PermGroup::rebuild() {
  base_.clear();
  for (;;) {
    // every generator must move some base point
    bool base_grew = false;
    for (const auto& s : gens_) {
      if (fixes_all(s, base_, base_.size())) {
        base_.push_back(smallest_moved_point(s));
        base_grew = true;
      }
    }
    build_levels_from_base();

    // process Schreier generators; any nontrivial residue becomes a new
    // strong generator and the whole chain is rebuilt
    bool added = false;
    for (std::size_t i = 0; i < levels_.size() && !added; ++i) {
      const Level& lv = levels_[i];
      for (const auto& [x, ux] : lv.transversal) {
        for (const auto& s : gens_) {
          if (!fixes_all(s, base_, i)) continue;
          int y = s(x);
          Permutation schreier =
              compose(compose(ux, s), lv.transversal.at(y).inverse());
          if (schreier.is_identity()) continue;
          auto [residue, level] = sift(std::move(schreier), int(i) + 1);
          if (!residue.is_identity()) {
            gens_.push_back(std::move(residue));
            added = true;
            break;
          }
        }
        if (added) break;
      }
    }
    if (!added && !base_grew) return;
  }
}

unsigned long long PermGroup::order() const {
  unsigned long long ord = 1;
  for (const auto& lv : levels_) {
    unsigned long long k = lv.transversal.size();
    if (ord > ~0ull / k)
      throw CapExceeded("group order exceeds 64-bit range");
    ord *= k;
  }
  return ord;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = sift(p, 0);
  return residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(unsigned long long cap) const {
  if (order() > cap)
    throw CapExceeded("element enumeration refused: group order " +
                      std::to_string(order()) + " exceeds cap " +
                      std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

PermGroup PermGroup::setwise_stabilizer(const std::vector<int>& set) const {
  Bitset in_set(degree_);
  for (int v : set) {
    if (v < 0 || v >= degree_)
      throw std::invalid_argument("setwise_stabilizer: point out of range");
    in_set.set(v);
  }

  PermGroup h = trivial(degree_);
  std::vector<Permutation> found;

  // Depth-first over the chain. After fixing the transversal choice at
  // levels 0..i the image of base_[i] under the final element is already
  // decided, so branches that move a base point across the set boundary
  // are cut immediately.
  auto rec = [&](auto&& self, std::size_t i, const Permutation& tail) -> void {
    if (i == levels_.size()) {
      for (int v = 0; v < degree_; ++v)
        if (in_set.test(v) != in_set.test(tail(v))) return;
      if (!tail.is_identity() && !h.contains(tail)) {
        found.push_back(tail);
        h = from_generators(degree_, found);
      }
      return;
    }
    for (const auto& [x, u] : levels_[i].transversal) {
      Permutation next = compose(u, tail);
      if (in_set.test(levels_[i].base) != in_set.test(next(levels_[i].base)))
        continue;
      self(self, i + 1, next);
    }
  };
  rec(rec, 0, Permutation::identity(degree_));
  return h;
}

unsigned long long group_order(const PermGroup& g) { return g.order(); }

}  // namespace prodstab
