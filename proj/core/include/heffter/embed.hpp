#pragma once

#include <string>
#include <vector>

#include "heffter/array.hpp"

namespace heffter {

/// Cyclic orders of the filled cells of every row (as columns) and every column (as rows).
struct LineOrdering {
  std::vector<std::vector<int>> rows;  ///< rows[i-1]: columns of row i in cyclic order
  std::vector<std::vector<int>> cols;  ///< cols[j-1]: rows of column j in cyclic order
};

/// Natural order on a line when its orientation is +1 (left to right, top to bottom), reversed otherwise.
[[nodiscard]] LineOrdering orderings_from_orientations(const WeakArray& a, const std::vector<int>& col_orient,
                                                       const std::vector<int>& row_orient);

/// omega_r / omega_c as successor tables indexed by residue (0 where undefined), plus inverses.
struct OmegaTables {
  std::vector<int> row_next, row_prev;
  std::vector<int> col_next, col_prev;
};

[[nodiscard]] OmegaTables omega_tables(const WeakArray& a, const LineOrdering& ord);

struct TraceSequence {
  std::vector<int> a;   ///< a_1, a_2, ... as symmetric representatives
  std::vector<int> mu;  ///< mu_1, mu_2, ...
};

/// First `length` terms of the (a_i, mu_i) recursion, starting from the first filled cell of row 1.
[[nodiscard]] TraceSequence trace_sequence(const WeakArray& a, const LineOrdering& ord, std::size_t length);

struct CompatibilityReport {
  bool compatible = false;
  std::size_t pair_period = 0;      ///< period of ((a_i, mu_i))
  std::size_t product_period = 0;   ///< period of (a_i mu_i)
  std::size_t odd_period = 0;       ///< period of ((a_{2i+1}, mu_{2i+1}))
  bool pair_criterion = false;      ///< pair_period == 2nk
  bool distinct_criterion = false;  ///< a_1 mu_1, ..., a_{2nk} mu_{2nk} pairwise distinct
  bool product_criterion = false;   ///< product_period == 2nk
  bool odd_criterion = false;       ///< odd_period == nk
};

/// Evaluates the four equivalent compatibility conditions independently.
/// Throws Error if they disagree (they are equivalent, so that would be a defect).
[[nodiscard]] CompatibilityReport compatibility_report(const WeakArray& a, const LineOrdering& ord);

/// rho_0 as a cyclic list over Z_v \ {0} and the edge signature by difference.
struct RotationSystem {
  int v = 0;
  std::vector<int> cycle;     ///< (mu_1 a_1, ..., mu_{2nk} a_{2nk}), symmetric representatives
  std::vector<int> next;      ///< rho_0 by residue
  std::vector<int> prev;      ///< rho_0^{-1} by residue
  std::vector<int> epsilon;   ///< by residue of the difference, +1 or -1 (index 0 unused)
};

/// rho_0 = (mu_1 a_1, ..., mu_2nk a_2nk) and epsilon(a) = 1 iff a occurs once in (a_i).
/// Requires t = 1 and compatible orderings; throws Error otherwise.
[[nodiscard]] RotationSystem rotation_and_signature(const WeakArray& a, const LineOrdering& ord);

/// The rotation system whose faces are the row and column faces below: term i enters the cycle
/// as mu_{i-1} a_i (indices cyclic), and an edge is twisted iff its class is reached twice by
/// steps of the same parity. Coincides with rotation_and_signature when there are no split cells.
[[nodiscard]] RotationSystem face_rotation(const WeakArray& a, const LineOrdering& ord);

/// Face of an oriented edge (x, x+a), a a row-signed value: x, x+a, x+a+w_r(a), ... over the row's cells.
[[nodiscard]] std::vector<int> row_face(const WeakArray& a, const LineOrdering& ord, int value, int x);
/// Face of (x, x+a) with -a a column-signed value, listed as x, x+S_{k-1}, ..., x+S_1
/// where S_j sums w_c^{-i}(-a) for i = 1..j and k is the column's cardinality.
[[nodiscard]] std::vector<int> column_face(const WeakArray& a, const LineOrdering& ord, int value, int x);

/// Cyclic vertex sequence, normalized to the least rotation over both directions.
[[nodiscard]] std::vector<int> canonical_cycle(std::vector<int> cycle);

struct EmbeddingReport {
  int vertices = 0;
  long long edges = 0;
  std::vector<std::vector<int>> faces;  ///< canonical cycles, sorted
  long long chi = 0;
  bool orientable = false;
  bool orientable_balance = false;   ///< signed-graph balance test
  bool orientable_signature = false; ///< epsilon identically +1
  long long genus = 0;               ///< (2 - chi)/2 when orientable
  long long crosscap = 0;            ///< 2 - chi otherwise
  bool regular = false;

  [[nodiscard]] std::vector<int> face_lengths() const;
  [[nodiscard]] std::string to_json(int indent = -1) const;
  [[nodiscard]] std::string to_text() const;
};

/// Traces every face of the signed rotation system on K_v (states: oriented edge plus local sign).
/// Throws Error when an orbit is its own mirror or when the orientability criteria disagree.
[[nodiscard]] EmbeddingReport trace_all_faces(const RotationSystem& rotation);

/// True when the face set is invariant under x -> x + 1 (mod v).
[[nodiscard]] bool regularity_check(const EmbeddingReport& report);

/// Orderings -> face_rotation -> traced report, in one call.
[[nodiscard]] EmbeddingReport archdeacon_embedding(const WeakArray& a, const LineOrdering& ord);

}  // namespace heffter
