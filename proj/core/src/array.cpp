#include "heffter/array.hpp"

namespace heffter {

ArrayContext ArrayContext::heffter(int m, int n, int h, int k, int t) {
  if (m < 1 || n < 1 || h < 1 || k < 1 || h > n || k > m)
    throw Error("invalid array shape " + std::to_string(m) + "x" + std::to_string(n) + " with h=" +
                std::to_string(h) + ", k=" + std::to_string(k));
  if (n * k != m * h) throw Error("inconsistent filled-cell counts: nk != mh");
  const int two_nk = 2 * n * k;
  if (t < 1 || two_nk % t != 0) throw Error("t=" + std::to_string(t) + " does not divide 2nk=" + std::to_string(two_nk));
  return ArrayContext{m, n, h, k, t, two_nk + t};
}

ArrayContext ArrayContext::grid(int m, int n, int v, int t) {
  if (m < 1 || n < 1) throw Error("array dimensions must be positive");
  if (v < 2 || t < 1 || v % t != 0)
    throw Error("t=" + std::to_string(t) + " does not divide v=" + std::to_string(v));
  return ArrayContext{m, n, 0, 0, t, v};
}

bool ArrayContext::heffter_shaped() const noexcept {
  return h > 0 && k > 0 && n * k == m * h && (2 * n * k) % t == 0 && v == 2 * n * k + t;
}

WeakArray::WeakArray(ArrayContext ctx)
    : ctx_(ctx), cells_(static_cast<std::size_t>(ctx.m) * static_cast<std::size_t>(ctx.n)) {}

std::size_t WeakArray::index(int r, int c) const {
  if (r < 1 || r > ctx_.m || c < 1 || c > ctx_.n)
    throw Error("cell (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + std::to_string(ctx_.m) +
                "x" + std::to_string(ctx_.n) + " array");
  return static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(ctx_.n) + static_cast<std::size_t>(c - 1);
}

const std::optional<SignedEntry>& WeakArray::at(int r, int c) const { return cells_[index(r, c)]; }

void WeakArray::set(int r, int c, SignedEntry e) {
  e.a = mod(e.a, ctx_.v);
  if (e.a == 0 || ctx_.v % ctx_.t != 0 || (e.a % (ctx_.v / ctx_.t)) == 0)
    throw Error("entry " + std::to_string(symmetric(e.a, ctx_.v)) + " at (" + std::to_string(r) + "," +
                std::to_string(c) + ") lies in the subgroup J");
  cells_[index(r, c)] = e;
}

void WeakArray::clear(int r, int c) { cells_[index(r, c)].reset(); }

std::vector<Cell> WeakArray::skeleton() const {
  std::vector<Cell> out;
  for (int r = 1; r <= ctx_.m; ++r)
    for (int c = 1; c <= ctx_.n; ++c)
      if (filled(r, c)) out.push_back({r, c});
  return out;
}

std::vector<int> WeakArray::filled_columns(int r) const {
  std::vector<int> out;
  for (int c = 1; c <= ctx_.n; ++c)
    if (filled(r, c)) out.push_back(c);
  return out;
}

std::vector<int> WeakArray::filled_rows(int c) const {
  std::vector<int> out;
  for (int r = 1; r <= ctx_.m; ++r)
    if (filled(r, c)) out.push_back(r);
  return out;
}

int WeakArray::filled_count() const {
  int count = 0;
  for (const auto& e : cells_) count += e.has_value() ? 1 : 0;
  return count;
}

int WeakArray::split_count() const {
  int count = 0;
  for (const auto& e : cells_) count += (e && e->split) ? 1 : 0;
  return count;
}

void WeakArray::set_context(const ArrayContext& ctx) {
  if (ctx.m != ctx_.m || ctx.n != ctx_.n || ctx.v != ctx_.v || ctx.t != ctx_.t)
    throw Error("context change must keep m, n, v and t");
  ctx_ = ctx;
}

void WeakArray::infer_shape() {
  const int filled_total = filled_count();
  ArrayContext ctx = ctx_;
  ctx.h = 0;
  ctx.k = 0;
  if (filled_total % ctx.m == 0 && filled_total % ctx.n == 0) {
    ctx.h = filled_total / ctx.m;
    ctx.k = filled_total / ctx.n;
    if (!ctx.heffter_shaped()) ctx.h = ctx.k = 0;
  }
  ctx_ = ctx;
}

WeakArray WeakArray::transposed() const {
  ArrayContext ctx = ctx_;
  std::swap(ctx.m, ctx.n);
  std::swap(ctx.h, ctx.k);
  WeakArray out(ctx);
  for (int r = 1; r <= ctx_.m; ++r)
    for (int c = 1; c <= ctx_.n; ++c)
      if (const auto& e = at(r, c)) out.set(c, r, SignedEntry{e->column_value(ctx_.v), e->split});
  return out;
}

}  // namespace heffter
