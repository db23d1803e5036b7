#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "heffter/array.hpp"

namespace heffter {

/// Proper nonempty zero-sum subsets of `line` (residues mod v), as index lists into `line`.
/// A subset larger than half the line is dropped when its complement is also zero-sum.
[[nodiscard]] std::vector<std::vector<std::size_t>> zero_sum_proper_subsets(std::span<const int> line, int v);

/// Row-sign values of row r (filled cells, left to right).
[[nodiscard]] std::vector<int> row_values(const WeakArray& a, int r);
/// Column-sign values of column c (filled cells, top to bottom).
[[nodiscard]] std::vector<int> column_values(const WeakArray& a, int c);

/// Each cell (row, c) for c in `columns` becomes -+s: row sign flipped, column sign kept.
/// The selected row values must sum to zero.
[[nodiscard]] WeakArray flip_row_subset(const WeakArray& a, int row, std::span<const int> columns);
/// Each cell (r, col) for r in `rows` becomes +-s: column sign flipped, row sign kept.
/// The selected column values must sum to zero.
[[nodiscard]] WeakArray flip_column_subset(const WeakArray& a, int col, std::span<const int> rows);

/// Whole-line flips: every cell of a selected row has its row sign flipped, every cell of a
/// selected column its column sign; a cell in both becomes the plain negation.
[[nodiscard]] WeakArray flip_lines(const WeakArray& a, std::span<const int> rows, std::span<const int> cols);

struct StrictnessOptions {
  unsigned threads = 1;
  std::uint64_t node_budget = 0;  ///< 0 = unlimited
};

struct StrictnessResult {
  bool strictly_weak = false;
  std::optional<WeakArray> witness;  ///< classical array with the same absolute values
  std::uint64_t nodes = 0;
};

/// Decides whether some choice of signs on |a_ij| yields a classical (relative) Heffter array.
/// Exhaustive: per-row zero-sum sign vectors, depth-first over rows with exact column
/// reachability pruning. Throws BudgetExceeded when the node budget runs out.
[[nodiscard]] StrictnessResult strictness_check(const WeakArray& a, const StrictnessOptions& options = {});

/// Every classical sign completion of the fill of `a` (absolute values fixed), up to `limit`.
[[nodiscard]] std::vector<WeakArray> classical_completions(const WeakArray& a, std::size_t limit = 0);

}  // namespace heffter
