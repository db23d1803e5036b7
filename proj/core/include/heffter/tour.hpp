#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/embed.hpp"

namespace heffter {

/// Line directions: +1 walks rows left to right and columns top to bottom.
struct Orientations {
  std::vector<int> C;  ///< one per column
  std::vector<int> R;  ///< one per row

  friend bool operator==(const Orientations&, const Orientations&) = default;
  friend auto operator<=>(const Orientations&, const Orientations&) = default;

  /// "c1,c2,.../r1,r2,..." with entries 1 or -1.
  [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] Orientations parse_orientations(std::string_view text);

/// A filled cell in one of the two copies (t = +1 or -1).
struct TourState {
  int i = 0;
  int j = 0;
  int t = 1;

  friend bool operator==(const TourState&, const TourState&) = default;
  friend auto operator<=>(const TourState&, const TourState&) = default;

  /// "(i,j,t)"
  [[nodiscard]] std::string to_string() const;
};

/// Next filled cell of row i in direction r_i * t; the copy flips iff the target is split.
[[nodiscard]] TourState move_row(const WeakArray& a, const Orientations& o, const TourState& s);
/// Next filled cell of column j in direction c_j * t; the copy flips iff the target is split.
[[nodiscard]] TourState move_col(const WeakArray& a, const Orientations& o, const TourState& s);
/// move_row after move_col.
[[nodiscard]] TourState tour_step(const WeakArray& a, const Orientations& o, const TourState& s);

/// First filled cell of row 1, in copy +1 when it is not split and -1 otherwise.
[[nodiscard]] TourState tour_start(const WeakArray& a);

struct TourList {
  std::vector<TourState> states;  ///< from the start until the step first returns to it
  bool solution = false;          ///< states.size() equals the number of filled cells
};

[[nodiscard]] TourList tour_list(const WeakArray& a, const Orientations& o);

enum class SolveStrategy { first, all };

struct SolveOptions {
  unsigned threads = 1;
  std::uint64_t node_budget = 0;  ///< orientation pairs examined; 0 = unlimited
  double time_budget_seconds = 0;
};

/// Exhaustive over all 2^(m+n) orientation pairs. Candidates are ordered by (C, R) with +1 before -1
/// in each position, and solutions come back in that order. Throws BudgetExceeded past the budget.
[[nodiscard]] std::vector<Orientations> solve_tour(const WeakArray& a, SolveStrategy strategy,
                                                   const SolveOptions& options = {});

/// The least cell (row, then column) visited in both copies, if any.
[[nodiscard]] std::optional<Cell> nonorientable_certificate(const TourList& tour);

/// True when position l of the tour holds a_{2l+1} (row-signed) in copy mu_{2l+1}.
[[nodiscard]] bool tour_matches_trace(const WeakArray& a, const Orientations& o, const TourList& tour);

/// Orderings induced by the orientations, checked compatible, then traced.
/// Throws Error when the orientations do not solve the tour problem.
[[nodiscard]] EmbeddingReport tour_to_embedding(const WeakArray& a, const Orientations& o);

}  // namespace heffter
