#include "heffter/modular.hpp"

#include <stdexcept>
#include <string>

namespace heffter {

PairClass canonical_class(std::int64_t a, int v) {
  if (v < 2) throw std::invalid_argument("modulus must be at least 2");
  const int r = mod(a, v);
  if (r == 0) throw std::invalid_argument("residue " + std::to_string(a) + " is 0 mod " + std::to_string(v));
  return PairClass{r <= v - r ? r : v - r};
}

Subgroup::Subgroup(int v, int t) : v_(v), t_(t), member_(static_cast<std::size_t>(v > 0 ? v : 0), false) {
  if (v < 1 || t < 1 || v % t != 0) {
    throw std::invalid_argument("subgroup of order " + std::to_string(t) + " does not exist in Z_" +
                                std::to_string(v));
  }
  const int step = v / t;
  for (int i = 0; i < t; ++i) member_[static_cast<std::size_t>(i * step)] = true;
}

std::vector<int> Subgroup::elements() const {
  std::vector<int> out;
  for (int a = 0; a < v_; ++a)
    if (member_[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

std::vector<int> Subgroup::classes() const {
  std::vector<int> out;
  for (int a = 1; a <= v_ / 2; ++a)
    if (!member_[static_cast<std::size_t>(a)]) out.push_back(a);
  return out;
}

}  // namespace heffter
