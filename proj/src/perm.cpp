#include "prodstab/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace prodstab {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= int(img_.size()) || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int v = 0; v < degree(); ++v)
    if (img_[v] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int v = 0; v < degree(); ++v) inv[img_[v]] = v;
  return Permutation(std::move(inv));
}

int Permutation::order() const {
  std::vector<char> seen(img_.size(), 0);
  long long ord = 1;
  for (int v = 0; v < degree(); ++v) {
    if (seen[v]) continue;
    int len = 0, w = v;
    while (!seen[w]) {
      seen[w] = 1;
      w = img_[w];
      ++len;
    }
    ord = std::lcm(ord, (long long)len);
  }
  return int(ord);
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (int v = 0; v < degree(); ++v) {
    if (v) s += ',';
    s += std::to_string(img_[v]);
  }
  return s + "]";
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int v = 0; v < p.degree(); ++v) img[v] = q(p(v));
  return Permutation(std::move(img));
}

}  // namespace prodstab
