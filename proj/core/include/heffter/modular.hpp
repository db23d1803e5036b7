#pragma once

#include <cstdint>
#include <vector>

namespace heffter {

/// Residue of `x` in [0, v).
[[nodiscard]] constexpr int mod(std::int64_t x, int v) noexcept {
  auto r = static_cast<int>(x % v);
  return r < 0 ? r + v : r;
}

[[nodiscard]] constexpr int neg_mod(int a, int v) noexcept { return a == 0 ? 0 : v - a; }

/// Symmetric representative: a if a <= floor(v/2), a - v otherwise.
[[nodiscard]] constexpr int symmetric(int a, int v) noexcept { return a <= v / 2 ? a : a - v; }

/// The pair class {a, -a} of a nonzero residue, identified by its smaller member.
struct PairClass {
  int rep = 0;

  friend constexpr bool operator==(PairClass, PairClass) = default;
  friend constexpr auto operator<=>(PairClass, PairClass) = default;
};

/// min(a, v - a). Throws std::invalid_argument when a is 0 mod v.
[[nodiscard]] PairClass canonical_class(std::int64_t a, int v);

/// The subgroup J of Z_v of order t, stored as a membership table.
class Subgroup {
 public:
  Subgroup(int v, int t);

  [[nodiscard]] int modulus() const noexcept { return v_; }
  [[nodiscard]] int order() const noexcept { return t_; }
  [[nodiscard]] bool contains(int a) const noexcept { return member_[static_cast<std::size_t>(mod(a, v_))]; }
  [[nodiscard]] std::vector<int> elements() const;

  /// Canonical representatives of (Z_v \ J)/+-, ascending.
  [[nodiscard]] std::vector<int> classes() const;

 private:
  int v_;
  int t_;
  std::vector<bool> member_;
};

}  // namespace heffter
