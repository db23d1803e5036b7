#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/systems.hpp"

namespace heffter {

/// Outcome of the parity conditions for integer WH_t(n;k) (also binding for any WH_t(n;k) with t even).
struct NecessaryVerdict {
  bool pass = true;
  int clause = 0;            ///< violated clause (1, 2 or 3), 0 when passing
  bool integer_only = false; ///< t odd: the verdict only constrains integer arrays
  std::string reason;
};

[[nodiscard]] NecessaryVerdict necessary_conditions(int n, int k, int t);

/// 0/1 fill pattern, row-major.
using Skeleton = std::vector<std::vector<bool>>;

/// Every m x n pattern with h cells per row and k per column, one per class under row and column
/// permutations. Representatives are lexicographically least (row-major, filled = 1 sorts after 0).
[[nodiscard]] std::vector<Skeleton> enumerate_skeletons(int m, int n, int h, int k);
/// Canonical form used by enumerate_skeletons.
[[nodiscard]] Skeleton canonical_skeleton(const Skeleton& s);

enum class SearchMode { classical, weak, strictly_weak };
enum class SearchGoal { exists, count, enumerate };

[[nodiscard]] std::string_view to_string(SearchMode mode) noexcept;
[[nodiscard]] std::string_view to_string(SearchGoal goal) noexcept;
[[nodiscard]] SearchMode parse_search_mode(std::string_view name);
[[nodiscard]] SearchGoal parse_search_goal(std::string_view name);

struct SearchSpec {
  ArrayContext ctx;
  SearchMode mode = SearchMode::weak;
  SearchGoal goal = SearchGoal::exists;
  EnumerationOptions options{};
};

/// The classes of each row and each column, rows and columns ordered by their smallest class.
/// Determines the array up to signs; every weak array is a placement with one signing per line.
struct Placement {
  std::vector<std::vector<int>> rows;
  std::vector<std::vector<int>> cols;

  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

struct SearchResult {
  bool found = false;
  std::uint64_t placements = 0;  ///< placements satisfying the mode
  std::uint64_t count = 0;       ///< arrays up to row/column order and global negation
  std::uint64_t nodes = 0;
  std::optional<WeakArray> witness;
  std::vector<WeakArray> arrays;  ///< goal == enumerate, unless a sink consumed them
};

/// Complete search over placements (pairs of orthogonal row/column class partitions) and signs.
/// Deterministic: results and, for complete runs, node counts do not depend on threads or order.
/// Throws BudgetExceeded when a node or time budget runs out.
/// With goal == enumerate and a sink, arrays are streamed in canonical order; the sink may stop the run.
[[nodiscard]] SearchResult search_arrays(const SearchSpec& spec,
                                         const std::function<bool(const WeakArray&)>& sink = {});

/// Placements of every weak array found by `search_arrays(weak, enumerate)`-equivalent means,
/// in canonical order; classical/strictly-weak restrict to placements with/without a sign completion.
[[nodiscard]] std::vector<Placement> enumerate_placements(const ArrayContext& ctx, SearchMode mode,
                                                          const EnumerationOptions& options = {});

/// The placement of a weak array (ordering its rows and columns canonically).
[[nodiscard]] Placement placement_of(const WeakArray& a);

/// Independent oracle: cell-by-cell backtracking over every canonical skeleton, with forced
/// last cells per line. Returns the placements of all weak arrays of the context (mode-filtered).
[[nodiscard]] std::vector<Placement> direct_placements(const ArrayContext& ctx, SearchMode mode);

/// A full m x 3 weak array over Z_{6m+1} whose only split cells are (r, 1) for r in `split_rows`.
/// Rows come from Heffter systems D(6m+1;3), tried in canonical order; columns are completed by an
/// exact dynamic program over partial column sums. nullopt when no system admits one.
[[nodiscard]] std::optional<WeakArray> find_weak_with_split_cells(int m, const std::vector<int>& split_rows,
                                                                  std::uint64_t node_budget = 0);

}  // namespace heffter
