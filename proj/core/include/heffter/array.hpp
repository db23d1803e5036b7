#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/modular.hpp"

namespace heffter {

/// Raised for structurally invalid input (bad parameters, malformed cells, collisions).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters of a (possibly relative, possibly weak) Heffter array.
///
/// A Heffter-shaped context satisfies nk = mh, t | 2nk and v = 2nk + t. Intermediate
/// grids (construction stages, hand-edited files) may carry a bare context with h = k = 0,
/// in which case only m, n, v and t are meaningful.
struct ArrayContext {
  int m = 0;
  int n = 0;
  int h = 0;
  int k = 0;
  int t = 1;
  int v = 1;

  /// Validated Heffter parameters; v is computed as 2nk + t.
  [[nodiscard]] static ArrayContext heffter(int m, int n, int h, int k, int t = 1);
  /// Bare grid context; t must divide v.
  [[nodiscard]] static ArrayContext grid(int m, int n, int v, int t);

  [[nodiscard]] bool heffter_shaped() const noexcept;
  [[nodiscard]] Subgroup subgroup() const { return Subgroup(v, t); }
  /// Number of pair classes of Z_v \ J, i.e. (v - t) / 2.
  [[nodiscard]] int class_count() const noexcept { return (v - t) / 2; }

  friend bool operator==(const ArrayContext&, const ArrayContext&) = default;
};

/// Entry stored as its row-sign value plus a split flag; the column-sign value is derived.
struct SignedEntry {
  int a = 0;           ///< row-sign residue in [1, v-1]
  bool split = false;  ///< true: column sign is opposite (written +-x / -+x)

  [[nodiscard]] constexpr int row_value() const noexcept { return a; }
  [[nodiscard]] constexpr int column_value(int v) const noexcept { return split ? neg_mod(a, v) : a; }

  friend constexpr bool operator==(SignedEntry, SignedEntry) = default;
};

/// 1-based cell coordinate.
struct Cell {
  int r = 0;
  int c = 0;

  friend constexpr bool operator==(Cell, Cell) = default;
  friend constexpr auto operator<=>(Cell, Cell) = default;
};

class WeakArray {
 public:
  WeakArray() = default;
  explicit WeakArray(ArrayContext ctx);

  [[nodiscard]] const ArrayContext& context() const noexcept { return ctx_; }
  [[nodiscard]] int rows() const noexcept { return ctx_.m; }
  [[nodiscard]] int cols() const noexcept { return ctx_.n; }
  [[nodiscard]] int modulus() const noexcept { return ctx_.v; }

  [[nodiscard]] const std::optional<SignedEntry>& at(int r, int c) const;
  [[nodiscard]] const std::optional<SignedEntry>& at(Cell cell) const { return at(cell.r, cell.c); }
  [[nodiscard]] bool filled(int r, int c) const { return at(r, c).has_value(); }

  /// Writes a cell; the residue is reduced mod v and must avoid J.
  void set(int r, int c, SignedEntry e);
  void set(Cell cell, SignedEntry e) { set(cell.r, cell.c, e); }
  void clear(int r, int c);

  /// Filled cells in reading order.
  [[nodiscard]] std::vector<Cell> skeleton() const;
  [[nodiscard]] std::vector<int> filled_columns(int r) const;
  [[nodiscard]] std::vector<int> filled_rows(int c) const;
  [[nodiscard]] int filled_count() const;
  [[nodiscard]] int split_count() const;

  /// Replaces the context (same m, n, v, t) once the fill pattern is known, e.g. after parsing.
  void set_context(const ArrayContext& ctx);
  /// Derives h and k from the fill pattern when it is Heffter-shaped.
  void infer_shape();

  [[nodiscard]] WeakArray transposed() const;

  friend bool operator==(const WeakArray&, const WeakArray&) = default;

 private:
  [[nodiscard]] std::size_t index(int r, int c) const;

  ArrayContext ctx_{};
  std::vector<std::optional<SignedEntry>> cells_;
};

}  // namespace heffter
