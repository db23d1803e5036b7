#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "heffter/array.hpp"

namespace heffter {

enum class Mode { classical, weak, relative_classical, relative_weak };

[[nodiscard]] std::string_view to_string(Mode mode) noexcept;
/// Accepts "classical", "weak", "relative-classical", "relative-weak".
[[nodiscard]] Mode parse_mode(std::string_view name);
[[nodiscard]] constexpr bool is_classical(Mode m) noexcept {
  return m == Mode::classical || m == Mode::relative_classical;
}

enum class Condition {
  shape,           ///< context is Heffter-shaped (v = 2nk + t, nk = mh)
  trivial_subgroup,///< non-relative modes require t = 1
  line_counts,     ///< (a): h filled cells per row, k per column
  support,         ///< (b): every class of (Z_v \ J)/+- exactly once
  zero_sums,       ///< (c): row sums with row signs, column sums with column signs
  unsplit,         ///< classical modes: no split entries
  integer_rows,    ///< integer row sums of symmetric representatives
  integer_columns, ///< integer column sums of symmetric representatives
};

[[nodiscard]] std::string_view to_string(Condition c) noexcept;

struct ConditionResult {
  Condition condition;
  bool ok = true;
  std::string detail;  ///< first offending row/column/class when !ok
};

struct VerificationReport {
  bool ok = true;
  std::vector<ConditionResult> conditions;

  [[nodiscard]] bool passed(Condition c) const;
  [[nodiscard]] std::vector<Condition> failures() const;
  [[nodiscard]] std::string to_text() const;
};

/// Checks the defining conditions of `mode`. With `fast`, stops at the first violation.
[[nodiscard]] VerificationReport verify(const WeakArray& a, Mode mode, bool fast = false);
/// Integer row/column sums using symmetric representatives (row signs / column signs).
[[nodiscard]] VerificationReport verify_integer(const WeakArray& a);

/// Plain cells (Theta) and split cells (Omega), reading order.
[[nodiscard]] std::pair<std::vector<Cell>, std::vector<Cell>> theta_omega(const WeakArray& a);

/// +1 when the class of `residue` sits in a plain cell, -1 when in a split cell.
/// Throws Error when the class does not occur.
[[nodiscard]] int lambda(const WeakArray& a, int residue);

/// lambda for every residue (index = residue, 0 where the class is absent).
[[nodiscard]] std::vector<int> lambda_table(const WeakArray& a);

}  // namespace heffter
