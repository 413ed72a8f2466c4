#ifndef PRODSTAB_PERM_HPP
#define PRODSTAB_PERM_HPP

#include <string>
#include <vector>

namespace prodstab {

// Permutation of {0..n-1} stored as its image sequence. Group elements act
// on the right throughout the library: v^(pq) = (v^p)^q, so compose(p, q)
// is "p then q".
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int n);

  int degree() const { return int(img_.size()); }
  int apply(int v) const { return img_[v]; }
  int operator()(int v) const { return img_[v]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  int order() const;  // lcm of cycle lengths

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  std::string to_string() const;  // "[3,0,1,2]"

 private:
  std::vector<int> img_;
};

// p then q.
Permutation compose(const Permutation& p, const Permutation& q);

}  // namespace prodstab

#endif
