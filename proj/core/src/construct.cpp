#include "heffter/construct.hpp"

#include <string>

namespace heffter {

namespace {

int wrap(int i, int n) { return mod(i - 1, n) + 1; }

void check_n(int n) {
  if (n < 12 || n % 4 != 0) throw Error("n must be a multiple of 4 with n >= 12, got " + std::to_string(n));
}

void put(WeakArray& a, int r, int c, int value, bool split) {
  if (a.filled(r, c))
    throw Error("cell (" + std::to_string(r) + "," + std::to_string(c) + ") is already filled");
  if (mod(value, a.modulus()) == 0) throw Error("zero entry at (" + std::to_string(r) + "," + std::to_string(c) + ")");
  a.set(r, c, SignedEntry{mod(value, a.modulus()), split});
}

}  // namespace

void diag_fill(WeakArray& a, const DiagSpec& spec) {
  if (spec.len < 1) throw Error("diag length must be positive");
  if (a.rows() != a.cols()) throw Error("diag needs a square array");
  const int n = a.rows();
  for (int i = 0; i < spec.len; ++i)
    put(a, wrap(spec.r + i * spec.d1, n), wrap(spec.c + i * spec.d1, n), spec.s + i * spec.d2, false);
}

std::vector<DiagSpec> h3_procedures(int n) {
  check_n(n);
  return {
      {2, 2, 1, 1, 1, (n - 4) / 2},                                   // A
      {(n + 6) / 2, (n + 6) / 2, -(n + 4) / 2, 1, -1, (n - 4) / 2},   // B
      {2, 1, -(5 * n + 4) / 2, 2, -1, n / 4},                         // C
      {3, 2, -(3 * n + 2) / 2, 2, -1, (n - 4) / 4},                   // D
      {1, 2, 3 * n / 2, 2, -1, n / 4},                                // E
      {2, 3, (5 * n + 2) / 2, 2, -1, (n - 4) / 4},                    // F
      {(n + 6) / 2, (n + 4) / 2, -5 * n / 4, 2, 1, n / 4},            // G
      {(n + 8) / 2, (n + 6) / 2, -9 * n / 4, 2, 1, (n - 4) / 4},      // H
      {(n + 4) / 2, (n + 6) / 2, (11 * n + 8) / 4, 2, 1, n / 4},      // I
      {(n + 6) / 2, (n + 8) / 2, (7 * n + 8) / 4, 2, 1, (n - 4) / 4}, // J
  };
}

WeakArray build_h3_base(int n) {
  check_n(n);
  WeakArray a(ArrayContext::heffter(n, n, 3, 3, 3));
  for (const auto& spec : h3_procedures(n)) diag_fill(a, spec);
  const int h = n / 2;
  put(a, 1, 1, -(n - 2) / 2, false);
  put(a, h, h, n, false);
  put(a, h, h + 1, (7 * n + 4) / 4, false);
  put(a, h + 1, h, -(9 * n + 4) / 4, false);
  put(a, h + 1, h + 1, (n + 2) / 2, false);
  put(a, h + 1, h + 2, 7 * n / 4, false);
  put(a, h + 2, h + 1, -(9 * n + 8) / 4, false);
  put(a, h + 2, h + 2, -n / 2, false);
  return a;
}

std::vector<MBlock> m_blocks(int n) {
  check_n(n);
  const int h = n / 2;
  std::vector<MBlock> out;
  out.push_back({1, {1, h + 1}, {{{{{1, true}, {4 * n + 1, false}}}, {{{-4 * n, false}, {-2, true}}}}}});
  out.push_back({2, {h + 1, 1}, {{{{{-(h + 1), true}, {-7 * n / 2, false}}}, {{{7 * n / 2 + 1, false}, {h + 2, true}}}}}});
  auto generic = [n](int i) {
    return std::array<std::array<int, 2>, 2>{{{i + 1, 4 * n + 1 - i}, {4 * n + 2 - i, i}}};
  };
  for (int i = 3; i <= h - 1; i += 2) {
    const auto m = generic(i);
    MBlock b{i, {i, h + i}, {}};
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) b.entries[x][y] = {-m[x][y], true};  // -+M_i
    out.push_back(b);
  }
  for (int i = h + 3; i <= n - 1; i += 2) {
    const auto m = generic(i);
    MBlock b{i, {i, i - h}, {}};
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) b.entries[x][y] = {m[y][x], true};  // +-M_i^T
    out.push_back(b);
  }
  return out;
}

std::string_view to_string(Wh5Stage stage) noexcept {
  switch (stage) {
    case Wh5Stage::base: return "base";
    case Wh5Stage::lifted: return "lifted";
    case Wh5Stage::blocks: return "blocks";
    case Wh5Stage::final: return "final";
  }
  return "?";
}

Wh5Stage parse_wh5_stage(std::string_view name) {
  if (name == "base") return Wh5Stage::base;
  if (name == "lifted") return Wh5Stage::lifted;
  if (name == "blocks") return Wh5Stage::blocks;
  if (name == "final") return Wh5Stage::final;
  throw Error("unknown stage '" + std::string(name) + "'");
}

WeakArray assemble_wh5(int n, Wh5Stage stage) {
  const WeakArray base = build_h3_base(n);
  if (stage == Wh5Stage::base) return base;

  // Integer entries of the base, re-read over the larger modulus.
  const int v = 10 * n + 5;
  WeakArray c(ArrayContext::grid(n, n, v, 5));
  const int lift = 4 * n + 2;
  for (const Cell cell : base.skeleton()) {
    int x = symmetric(base.at(cell)->a, base.modulus());
    if (cell.r == cell.c) x += x > 0 ? lift : -lift;
    put(c, cell.r, cell.c, x, false);
  }
  if (stage == Wh5Stage::lifted) return c;

  for (const auto& block : m_blocks(n))
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const auto& e = block.entries[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        put(c, block.anchor.r + x, block.anchor.c + y, e.value, e.split);
      }
  if (stage == Wh5Stage::blocks) return c;

  const int h = n / 2;
  WeakArray out = c;
  out.set_context(ArrayContext::heffter(n, n, 5, 5, 5));
  for (int i = h + 3; i <= n - 1; i += 2) {
    out.set(i, i, *c.at(i + 1, i + 1));
    out.set(i + 1, i + 1, *c.at(i, i));
  }
  out.set(h + 1, h + 1, SignedEntry{neg_mod(c.at(h + 2, h + 2)->a, v), false});
  out.set(h + 2, h + 2, SignedEntry{neg_mod(c.at(h + 1, h + 1)->a, v), false});
  return out;
}

std::vector<std::int64_t> integer_row_sums(const WeakArray& a) {
  std::vector<std::int64_t> out;
  for (int r = 1; r <= a.rows(); ++r) {
    std::int64_t sum = 0;
    for (int c : a.filled_columns(r)) sum += symmetric(a.at(r, c)->row_value(), a.modulus());
    out.push_back(sum);
  }
  return out;
}

std::vector<std::int64_t> integer_column_sums(const WeakArray& a) {
  std::vector<std::int64_t> out;
  for (int c = 1; c <= a.cols(); ++c) {
    std::int64_t sum = 0;
    for (int r : a.filled_rows(c)) sum += symmetric(a.at(r, c)->column_value(a.modulus()), a.modulus());
    out.push_back(sum);
  }
  return out;
}

}  // namespace heffter
