#ifndef PRODSTAB_BITSET_HPP
#define PRODSTAB_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace prodstab {

// Fixed-capacity-free dynamic bitset. Graphs store one row per vertex, so the
// hot operations are intersection tests and subset tests on whole rows.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(i >= 0 && i < nbits_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  // this ⊆ o
  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool is_proper_subset_of(const Bitset& o) const {
    return is_subset_of(o) && *this != o;
  }

  Bitset& operator&=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  // this &= ~o
  Bitset& and_not(const Bitset& o) {
    assert(nbits_ == o.nbits_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  // Index of the lowest set bit, or -1.
  int find_first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return int(k << 6) + std::countr_zero(w_[k]);
    return -1;
  }

  // Lowest set bit strictly above i, or -1.
  int find_next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    std::size_t k = std::size_t(i) >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k << 6) + std::countr_zero(w);
      if (++k == w_.size()) return -1;
      w = w_[k];
    }
  }

  template <class F>
  void for_each(F f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace prodstab

#endif
