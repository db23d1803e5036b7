#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "heffter/array.hpp"

namespace heffter {

/// Fills A[r + i*d1, c + i*d1] = s + i*d2 for i in [0, len), indices reduced into [1, n].
struct DiagSpec {
  int r = 1;
  int c = 1;
  int s = 0;
  int d1 = 1;
  int d2 = 0;
  int len = 1;
};

/// Writes plain entries along a diagonal of a square array. Throws Error on a filled cell.
void diag_fill(WeakArray& a, const DiagSpec& spec);

/// An entry of an M-block: signed integer row value, split when the column sign is opposite.
struct MEntry {
  int value = 0;
  bool split = false;
};

/// A 2x2 block inserted into the lifted base, already sign-decorated (and transposed where required).
struct MBlock {
  int index = 0;
  Cell anchor;  ///< top-left cell
  std::array<std::array<MEntry, 2>, 2> entries{};
};

/// The 10 diagonal procedures of the cyclically 3-diagonal base, in order A..J.
[[nodiscard]] std::vector<DiagSpec> h3_procedures(int n);

/// Integer H_3(n;3) over Z_{6n+3}, n = 0 mod 4, n >= 12.
[[nodiscard]] WeakArray build_h3_base(int n);

/// M_1, M_2, -+M_i (odd i in [3, n/2-1]) and +-M_i^T (odd i in [n/2+3, n-1]) with their positions.
[[nodiscard]] std::vector<MBlock> m_blocks(int n);

enum class Wh5Stage { base, lifted, blocks, final };

[[nodiscard]] std::string_view to_string(Wh5Stage stage) noexcept;
[[nodiscard]] Wh5Stage parse_wh5_stage(std::string_view name);

/// Strictly weak integer WH_5(n;5) over Z_{10n+5}, or one of its intermediate stages.
/// Stages after the base use a bare grid context (v = 10n+5, t = 5) until the final array.
[[nodiscard]] WeakArray assemble_wh5(int n, Wh5Stage stage = Wh5Stage::final);

/// Integer sums of each row (row signs) and each column (column signs), symmetric representatives.
[[nodiscard]] std::vector<std::int64_t> integer_row_sums(const WeakArray& a);
[[nodiscard]] std::vector<std::int64_t> integer_column_sums(const WeakArray& a);

}  // namespace heffter
