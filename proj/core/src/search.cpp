#include "heffter/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <atomic>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "heffter/budget.hpp"
#include "heffter/modular.hpp"
#include "heffter/transforms.hpp"

namespace heffter {

NecessaryVerdict necessary_conditions(int n, int k, int t) {
  if (n < 1 || k < 1 || t < 1) throw Error("n, k and t must be positive");
  const int nk = n * k;
  if ((2 * nk) % t != 0) throw Error("t must divide 2nk");
  NecessaryVerdict verdict;
  verdict.integer_only = t % 2 != 0;
  auto mod4 = [](int x) { return mod(x, 4); };
  if (nk % t == 0) {
    const bool ok = mod4(nk) == 0 || (nk % 2 != 0 && mod4(nk) == mod4(-t));
    if (!ok) {
      verdict.pass = false;
      verdict.clause = 1;
      verdict.reason = "t divides nk=" + std::to_string(nk) + " but nk is neither 0 nor -t mod 4";
    }
  } else if (t == 2 * nk) {
    if (k % 2 != 0) {
      verdict.pass = false;
      verdict.clause = 2;
      verdict.reason = "t = 2nk requires k even, k=" + std::to_string(k);
    }
  } else if ((t + 2 * nk) % 8 != 0) {
    verdict.pass = false;
    verdict.clause = 3;
    verdict.reason = "t + 2nk = " + std::to_string(t + 2 * nk) + " is not 0 mod 8";
  }
  return verdict;
}

// ---------------------------------------------------------------- skeletons

Skeleton canonical_skeleton(const Skeleton& s) {
  const std::size_t m = s.size();
  const std::size_t n = m ? s[0].size() : 0;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Skeleton best;
  do {
    Skeleton cand(m, std::vector<bool>(n));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) cand[r][c] = s[r][perm[c]];
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Skeleton> enumerate_skeletons(int m, int n, int h, int k) {
  if (m < 1 || n < 1 || h < 0 || k < 0 || h > n || k > m) throw Error("invalid skeleton parameters");
  if (n * k != m * h) throw Error("skeleton parameters need nk = mh");
  if (n > 9) throw Error("skeleton enumeration is limited to 9 columns");
  std::vector<std::vector<bool>> row_patterns;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != h) continue;
    std::vector<bool> row(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) row[static_cast<std::size_t>(c)] = (mask >> (n - 1 - c)) & 1u;
    row_patterns.push_back(std::move(row));
  }
  std::set<Skeleton> found;
  Skeleton current;
  std::vector<int> col_count(static_cast<std::size_t>(n), 0);
  auto recurse = [&](auto&& self, int r) -> void {
    if (r == m) {
      found.insert(canonical_skeleton(current));
      return;
    }
    for (const auto& row : row_patterns) {
      bool ok = true;
      for (int c = 0; c < n && ok; ++c) {
        const int after = col_count[static_cast<std::size_t>(c)] + (row[static_cast<std::size_t>(c)] ? 1 : 0);
        // Each column must still be able to reach exactly k.
        ok = after <= k && after + (m - r - 1) >= k;
      }
      if (!ok) continue;
      for (int c = 0; c < n; ++c) col_count[static_cast<std::size_t>(c)] += row[static_cast<std::size_t>(c)];
      current.push_back(row);
      self(self, r + 1);
      current.pop_back();
      for (int c = 0; c < n; ++c) col_count[static_cast<std::size_t>(c)] -= row[static_cast<std::size_t>(c)];
    }
  };
  recurse(recurse, 0);
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------- names

std::string_view to_string(SearchMode mode) noexcept {
  switch (mode) {
    case SearchMode::classical: return "classical";
    case SearchMode::weak: return "weak";
    case SearchMode::strictly_weak: return "strictly-weak";
  }
  return "?";
}

std::string_view to_string(SearchGoal goal) noexcept {
  switch (goal) {
    case SearchGoal::exists: return "exists";
    case SearchGoal::count: return "count";
    case SearchGoal::enumerate: return "enumerate";
  }
  return "?";
}

SearchMode parse_search_mode(std::string_view name) {
  if (name == "classical") return SearchMode::classical;
  if (name == "weak") return SearchMode::weak;
  if (name == "strictly-weak" || name == "strictly_weak") return SearchMode::strictly_weak;
  throw Error("unknown search mode '" + std::string(name) + "'");
}

SearchGoal parse_search_goal(std::string_view name) {
  if (name == "exists") return SearchGoal::exists;
  if (name == "count") return SearchGoal::count;
  if (name == "enumerate") return SearchGoal::enumerate;
  throw Error("unknown search goal '" + std::string(name) + "'");
}

Placement placement_of(const WeakArray& a) {
  const int v = a.modulus();
  Placement p;
  for (int r = 1; r <= a.rows(); ++r) {
    std::vector<int> line;
    for (int c : a.filled_columns(r)) line.push_back(canonical_class(a.at(r, c)->a, v).rep);
    std::sort(line.begin(), line.end());
    p.rows.push_back(std::move(line));
  }
  for (int c = 1; c <= a.cols(); ++c) {
    std::vector<int> line;
    for (int r : a.filled_rows(c)) line.push_back(canonical_class(a.at(r, c)->a, v).rep);
    std::sort(line.begin(), line.end());
    p.cols.push_back(std::move(line));
  }
  std::sort(p.rows.begin(), p.rows.end());
  std::sort(p.cols.begin(), p.cols.end());
  return p;
}

// ---------------------------------------------------------------- placement engine

namespace {

using Signing = std::vector<int>;

std::vector<Signing> both_signs(const std::vector<Signing>& half) {
  std::vector<Signing> out = half;
  for (const auto& s : half) {
    Signing neg = s;
    for (int& x : neg) x = -x;
    out.push_back(std::move(neg));
  }
  return out;
}

// One placement: row block ids and column block ids, both in smallest-class order.
struct Candidate {
  ClassPartition rows;
  ClassPartition cols;
};

struct ItemResult {
  std::uint64_t placements = 0;
  std::uint64_t count = 0;
  std::optional<WeakArray> witness;
  std::vector<WeakArray> arrays;
  std::vector<Placement> accepted;
};

class Engine {
 public:
  Engine(const ArrayContext& ctx, SearchMode mode, SearchGoal goal, const EnumerationOptions& options)
      : ctx_(ctx),
        mode_(mode),
        goal_(goal),
        options_(options),
        budget_(options.node_budget, options.time_budget_seconds),
        row_table_(ctx.v, ctx.t, ctx.h),
        col_table_(ctx.v, ctx.t, ctx.k) {
    if (ctx.m > 64 || ctx.n > 64) throw Error("search supports at most 64 rows and columns");
  }

  Budget& budget() { return budget_; }

  std::vector<ClassPartition> row_partitions() {
    std::vector<ClassPartition> out;
    for_each_partition(row_table_, budget_, [&](const ClassPartition& p) {
      out.push_back(p);
      return true;
    });
    return out;
  }

  // Column partitions orthogonal to `rows`, sorted canonically.
  std::vector<ClassPartition> column_partitions(const ClassPartition& rows) {
    std::vector<int> class_row(row_table_.classes().size(), -1);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t b = 0; b < row_table_.blocks()[static_cast<std::size_t>(rows[i])].classes.size(); ++b) {
        const int c = row_table_.blocks()[static_cast<std::size_t>(rows[i])].classes[b];
        class_row[static_cast<std::size_t>(row_table_.class_index(c))] = static_cast<int>(i);
      }
    // Row-usage mask per column block (or ~0 when a block hits one row twice).
    const auto& blocks = col_table_.blocks();
    std::vector<std::uint64_t> row_mask(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      std::uint64_t mask = 0;
      bool ok = true;
      for (int c : blocks[b].classes) {
        const std::uint64_t bit = 1ull << class_row[static_cast<std::size_t>(col_table_.class_index(c))];
        if (mask & bit) ok = false;
        mask |= bit;
      }
      row_mask[b] = ok ? mask : ~0ull;
    }
    std::vector<ClassPartition> out;
    ClassMask covered;
    ClassPartition stack;
    const int count = static_cast<int>(col_table_.classes().size());
    auto recurse = [&](auto&& self) -> void {
      budget_.tick();
      int next = 0;
      while (next < count && covered.test(static_cast<std::size_t>(next))) ++next;
      if (next == count) {
        out.push_back(stack);
        return;
      }
      const auto& cands = col_table_.blocks_starting_at(next);
      for (std::size_t s = 0; s < cands.size(); ++s) {
        const int id = cands[options_.reverse_order ? cands.size() - 1 - s : s];
        if (row_mask[static_cast<std::size_t>(id)] == ~0ull) continue;
        const auto& mask = blocks[static_cast<std::size_t>(id)].mask;
        if ((covered & mask).any()) continue;
        covered |= mask;
        stack.push_back(id);
        self(self);
        stack.pop_back();
        covered &= ~mask;
      }
    };
    recurse(recurse);
    std::sort(out.begin(), out.end());
    return out;
  }

  ItemResult process(const ClassPartition& rows) {
    ItemResult result;
    for (const auto& cols : column_partitions(rows)) {
      evaluate(Candidate{rows, cols}, result);
      if (goal_ == SearchGoal::exists && result.witness) break;
    }
    return result;
  }

 private:
  Placement to_placement(const Candidate& cand) const {
    Placement p;
    for (int id : cand.rows) p.rows.push_back(row_table_.blocks()[static_cast<std::size_t>(id)].classes);
    for (int id : cand.cols) p.cols.push_back(col_table_.blocks()[static_cast<std::size_t>(id)].classes);
    return p;
  }

  // Cell (i, j) -> (position in row block i, position in column block j), or nothing.
  struct Layout {
    std::vector<std::vector<std::optional<std::pair<int, int>>>> pos;
  };

  Layout layout(const Placement& p) const {
    Layout l;
    l.pos.assign(p.rows.size(), std::vector<std::optional<std::pair<int, int>>>(p.cols.size()));
    std::map<int, std::pair<int, int>> in_col;  // class -> (column, position)
    for (std::size_t j = 0; j < p.cols.size(); ++j)
      for (std::size_t q = 0; q < p.cols[j].size(); ++q)
        in_col[p.cols[j][q]] = {static_cast<int>(j), static_cast<int>(q)};
    for (std::size_t i = 0; i < p.rows.size(); ++i)
      for (std::size_t q = 0; q < p.rows[i].size(); ++q) {
        const auto [j, qc] = in_col.at(p.rows[i][q]);
        l.pos[i][static_cast<std::size_t>(j)] = std::pair<int, int>{static_cast<int>(q), qc};
      }
    return l;
  }

  WeakArray assemble(const Placement& p, const Layout& l, const std::vector<const Signing*>& row_signs,
                     const std::vector<const Signing*>& col_signs) const {
    WeakArray a(ctx_);
    for (std::size_t i = 0; i < l.pos.size(); ++i)
      for (std::size_t j = 0; j < l.pos[i].size(); ++j) {
        if (!l.pos[i][j]) continue;
        const auto [qr, qc] = *l.pos[i][j];
        const int cls = p.rows[i][static_cast<std::size_t>(qr)];
        const int rs = (*row_signs[i])[static_cast<std::size_t>(qr)];
        const int cs = (*col_signs[j])[static_cast<std::size_t>(qc)];
        a.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
              SignedEntry{mod(static_cast<std::int64_t>(rs) * cls, ctx_.v), rs != cs});
      }
    return a;
  }

  // Sign options per line: first row modulo global negation, every other line with both signs.
  std::vector<std::vector<Signing>> line_options(const Candidate& cand) const {
    std::vector<std::vector<Signing>> opts;
    for (std::size_t i = 0; i < cand.rows.size(); ++i) {
      const auto& half = row_table_.blocks()[static_cast<std::size_t>(cand.rows[i])].signings;
      opts.push_back(i == 0 ? half : both_signs(half));
    }
    for (int id : cand.cols) opts.push_back(both_signs(col_table_.blocks()[static_cast<std::size_t>(id)].signings));
    return opts;
  }

  template <typename Visit>
  void for_each_signing(const std::vector<std::vector<Signing>>& opts, Visit&& visit) const {
    std::vector<std::size_t> idx(opts.size(), 0);
    const std::size_t m = static_cast<std::size_t>(ctx_.m);
    while (true) {
      std::vector<const Signing*> rs, cs;
      for (std::size_t i = 0; i < opts.size(); ++i) (i < m ? rs : cs).push_back(&opts[i][idx[i]]);
      if (!visit(rs, cs)) return;
      std::size_t i = opts.size();
      while (i-- > 0) {
        if (++idx[i] < opts[i].size()) break;
        idx[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) return;
    }
  }

  static std::uint64_t product(const std::vector<std::vector<Signing>>& opts) {
    std::uint64_t p = 1;
    for (const auto& o : opts) {
      if (p > (std::uint64_t{1} << 62) / o.size()) throw Error("array count overflows 64 bits");
      p *= o.size();
    }
    return p;
  }

  WeakArray weak_witness(const Placement& p, const Layout& l, const std::vector<std::vector<Signing>>& opts) const {
    std::optional<WeakArray> best;
    int best_split = 0;
    if (product(opts) <= (1u << 16)) {
      for_each_signing(opts, [&](const auto& rs, const auto& cs) {
        WeakArray a = assemble(p, l, rs, cs);
        const int split = a.split_count();
        if (!best || split < best_split) {
          best = std::move(a);
          best_split = split;
        }
        return true;
      });
      return *best;
    }
    std::vector<const Signing*> rs, cs;
    for (std::size_t i = 0; i < opts.size(); ++i)
      (i < static_cast<std::size_t>(ctx_.m) ? rs : cs).push_back(&opts[i].front());
    return assemble(p, l, rs, cs);
  }

  void evaluate(const Candidate& cand, ItemResult& out) {
    const Placement p = to_placement(cand);
    const Layout l = layout(p);
    const auto opts = line_options(cand);

    if (mode_ == SearchMode::weak) {
      ++out.placements;
      out.accepted.push_back(p);
      out.count += product(opts);
      if (goal_ == SearchGoal::exists) out.witness = weak_witness(p, l, opts);
      if (goal_ == SearchGoal::enumerate)
        for_each_signing(opts, [&](const auto& rs, const auto& cs) {
          out.arrays.push_back(assemble(p, l, rs, cs));
          return true;
        });
      return;
    }

    // Absolute values only: plain entries with positive representatives.
    WeakArray magnitudes(ctx_);
    for (std::size_t i = 0; i < l.pos.size(); ++i)
      for (std::size_t j = 0; j < l.pos[i].size(); ++j)
        if (l.pos[i][j])
          magnitudes.set(static_cast<int>(i) + 1, static_cast<int>(j) + 1,
                         SignedEntry{p.rows[i][static_cast<std::size_t>(l.pos[i][j]->first)], false});

    if (mode_ == SearchMode::classical) {
      if (goal_ == SearchGoal::exists) {
        const auto check = strictness_check(magnitudes);
        budget_.add(check.nodes);
        if (!check.witness) return;
        ++out.placements;
        out.accepted.push_back(p);
        out.witness = normalize_sign(*check.witness);
        return;
      }
      const auto all = classical_completions(magnitudes);
      budget_.add(all.size() + 1);
      if (all.empty()) return;
      ++out.placements;
      out.accepted.push_back(p);
      out.count += all.size() / 2;
      if (goal_ == SearchGoal::enumerate)
        for (const auto& b : all)
          if (b.at(1, first_col(b))->a <= ctx_.v / 2) out.arrays.push_back(b);
      return;
    }

    const auto check = strictness_check(magnitudes);
    budget_.add(check.nodes);
    if (check.witness) return;
    ++out.placements;
    out.accepted.push_back(p);
    out.count += product(opts);
    if (goal_ == SearchGoal::exists) out.witness = weak_witness(p, l, opts);
    if (goal_ == SearchGoal::enumerate)
      for_each_signing(opts, [&](const auto& rs, const auto& cs) {
        out.arrays.push_back(assemble(p, l, rs, cs));
        return true;
      });
  }

  static int first_col(const WeakArray& a) { return a.filled_columns(1).front(); }

  WeakArray normalize_sign(const WeakArray& b) const {
    if (b.at(1, first_col(b))->a <= ctx_.v / 2) return b;
    WeakArray out(b.context());
    for (const Cell cell : b.skeleton()) out.set(cell, SignedEntry{neg_mod(b.at(cell)->a, ctx_.v), b.at(cell)->split});
    return out;
  }

  ArrayContext ctx_;
  SearchMode mode_;
  SearchGoal goal_;
  EnumerationOptions options_;
  Budget budget_;
  BlockTable row_table_;
  BlockTable col_table_;
};

void check_spec(const ArrayContext& ctx) {
  if (!ctx.heffter_shaped()) throw Error("search needs Heffter parameters (nk = mh, t | 2nk, v = 2nk + t)");
  if (ctx.h < 3 || ctx.k < 3) throw Error("search needs at least 3 cells per row and column");
}

struct RunOutput {
  std::vector<ItemResult> items;  // indexed like the row partitions
  std::uint64_t nodes = 0;
};

}  // namespace

SearchResult search_arrays(const SearchSpec& spec, const std::function<bool(const WeakArray&)>& sink) {
  check_spec(spec.ctx);
  SearchResult result;
  Engine engine(spec.ctx, spec.mode, spec.goal, spec.options);
  // A Heffter system for rows and one for columns are both necessary.
  const auto rows = engine.row_partitions();
  const std::size_t total = rows.size();
  std::vector<std::optional<ItemResult>> items(total);
  const bool exists = spec.goal == SearchGoal::exists;
  bool stopped = false;

  auto emit = [&](ItemResult& item) {
    result.placements += item.placements;
    result.count += item.count;
    if (item.witness && !result.witness) result.witness = std::move(item.witness);
    for (auto& a : item.arrays) {
      if (stopped) break;
      if (sink) {
        if (!sink(a)) stopped = true;
      } else {
        result.arrays.push_back(std::move(a));
      }
    }
    item.arrays.clear();
  };

  if (spec.options.threads <= 1 && !spec.options.reverse_order) {
    for (std::size_t i = 0; i < total && !stopped; ++i) {
      ItemResult item = engine.process(rows[i]);
      emit(item);
      if (exists && result.witness) break;
    }
  } else {
    std::atomic<std::size_t> best{total};
    std::vector<std::size_t> order(total);
    for (std::size_t i = 0; i < total; ++i) order[i] = spec.options.reverse_order ? total - 1 - i : i;
    auto work = [&](std::size_t i) {
      if (exists && i > best.load()) return;
      items[i] = engine.process(rows[i]);
      if (exists && items[i]->witness) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    };
    const unsigned threads = std::max(1u, spec.options.threads);
    if (threads == 1) {
      for (std::size_t i : order) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::future<void>> workers;
      for (unsigned w = 0; w < threads; ++w)
        workers.push_back(std::async(std::launch::async, [&] {
          for (std::size_t s = next++; s < total; s = next++) work(order[s]);
        }));
      for (auto& f : workers) f.get();
    }
    for (std::size_t i = 0; i < total && !stopped; ++i) {
      if (!items[i]) continue;
      if (exists && i > best.load()) break;
      emit(*items[i]);
      if (exists && result.witness) break;
    }
  }
  result.found = exists ? result.witness.has_value() : result.placements > 0;
  result.nodes = engine.budget().nodes();
  return result;
}

std::vector<Placement> enumerate_placements(const ArrayContext& ctx, SearchMode mode, const EnumerationOptions& options) {
  check_spec(ctx);
  Engine engine(ctx, mode, SearchGoal::count, options);
  std::vector<Placement> out;
  for (const auto& rows : engine.row_partitions()) {
    auto item = engine.process(rows);
    for (auto& p : item.accepted) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- direct oracle

std::vector<Placement> direct_placements(const ArrayContext& ctx, SearchMode mode) {
  check_spec(ctx);
  const int v = ctx.v;
  const Subgroup group = ctx.subgroup();
  const auto classes = group.classes();
  std::set<Placement> found;

  for (const auto& skel : enumerate_skeletons(ctx.m, ctx.n, ctx.h, ctx.k)) {
    std::vector<Cell> cells;
    for (int r = 1; r <= ctx.m; ++r)
      for (int c = 1; c <= ctx.n; ++c)
        if (skel[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]) cells.push_back({r, c});
    std::vector<int> last_in_row(static_cast<std::size_t>(ctx.m) + 1, 0), last_in_col(static_cast<std::size_t>(ctx.n) + 1, 0);
    for (const Cell cell : cells) {
      last_in_row[static_cast<std::size_t>(cell.r)] = cell.c;
      last_in_col[static_cast<std::size_t>(cell.c)] = std::max(last_in_col[static_cast<std::size_t>(cell.c)], cell.r);
    }
    const bool full = static_cast<int>(cells.size()) == ctx.m * ctx.n;

    WeakArray a(ctx);
    std::vector<std::int64_t> row_sum(static_cast<std::size_t>(ctx.m) + 1, 0), col_sum(static_cast<std::size_t>(ctx.n) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(v / 2 + 1), 0);

    auto place = [&](auto&& self, std::size_t idx) -> void {
      if (idx == cells.size()) {
        found.insert(placement_of(a));
        return;
      }
      const Cell cell = cells[idx];
      const bool row_last = last_in_row[static_cast<std::size_t>(cell.r)] == cell.c;
      const bool col_last = last_in_col[static_cast<std::size_t>(cell.c)] == cell.r;
      auto try_entry = [&](int row_value, int col_value) {
        const int rv = mod(row_value, v);
        const int cv = mod(col_value, v);
        if (rv == 0 || group.contains(rv)) return;
        const int cls = canonical_class(rv, v).rep;
        if (canonical_class(cv, v).rep != cls || used[static_cast<std::size_t>(cls)]) return;
        if (idx == 0 && rv > v / 2) return;                    // global negation
        if (idx == 0 && full && cls != classes.front()) return;  // smallest class at (1,1)
        used[static_cast<std::size_t>(cls)] = 1;
        a.set(cell, SignedEntry{rv, rv != cv});
        row_sum[static_cast<std::size_t>(cell.r)] += rv;
        col_sum[static_cast<std::size_t>(cell.c)] += cv;
        self(self, idx + 1);
        row_sum[static_cast<std::size_t>(cell.r)] -= rv;
        col_sum[static_cast<std::size_t>(cell.c)] -= cv;
        a.clear(cell.r, cell.c);
        used[static_cast<std::size_t>(cls)] = 0;
      };
      const int need_row = mod(-row_sum[static_cast<std::size_t>(cell.r)], v);
      const int need_col = mod(-col_sum[static_cast<std::size_t>(cell.c)], v);
      if (row_last && col_last) {
        try_entry(need_row, need_col);
      } else if (row_last) {
        try_entry(need_row, need_row);
        try_entry(need_row, -need_row);
      } else if (col_last) {
        try_entry(need_col, need_col);
        try_entry(-need_col, need_col);
      } else {
        for (int cls : classes) {
          if (used[static_cast<std::size_t>(cls)]) continue;
          for (int rs : {1, -1})
            for (int cs : {1, -1}) try_entry(rs * cls, cs * cls);
        }
      }
    };
    place(place, 0);
  }

  std::vector<Placement> out;
  for (const auto& p : found) {
    if (mode == SearchMode::weak) {
      out.push_back(p);
      continue;
    }
    // Rebuild magnitudes on a canonical layout to decide sign completability.
    WeakArray mags(ctx);
    std::map<int, int> col_of;
    for (std::size_t j = 0; j < p.cols.size(); ++j)
      for (int c : p.cols[j]) col_of[c] = static_cast<int>(j) + 1;
    for (std::size_t i = 0; i < p.rows.size(); ++i)
      for (int c : p.rows[i]) mags.set(static_cast<int>(i) + 1, col_of.at(c), SignedEntry{c, false});
    const bool classical = strictness_check(mags).witness.has_value();
    if (classical == (mode == SearchMode::classical)) out.push_back(p);
  }
  return out;
}

// ---------------------------------------------------------------- WH(m,3) with split cells in column 1

std::optional<WeakArray> find_weak_with_split_cells(int m, const std::vector<int>& split_rows, std::uint64_t node_budget) {
  if (m < 3) throw Error("need at least 3 rows");
  std::set<int> split_set(split_rows.begin(), split_rows.end());
  if (split_set.size() != split_rows.size() || split_set.empty())
    throw Error("split rows must be distinct and nonempty");
  for (int r : split_rows)
    if (r < 1 || r > m) throw Error("split row out of range");
  const int v = 6 * m + 1;
  const BlockTable table(v, 1, 3);
  Budget budget(node_budget, 0);
  const std::size_t s = split_rows.size();
  std::optional<WeakArray> answer;

  using Triple = std::array<int, 3>;
  auto options_for = [&](int id) {
    std::vector<Triple> out;
    const auto& block = table.blocks()[static_cast<std::size_t>(id)];
    for (const auto& signing : both_signs(block.signings)) {
      std::array<int, 3> values{};
      for (std::size_t q = 0; q < 3; ++q) values[q] = signing[q] * block.classes[q];
      std::array<int, 3> perm{0, 1, 2};
      do out.push_back({values[static_cast<std::size_t>(perm[0])], values[static_cast<std::size_t>(perm[1])],
                        values[static_cast<std::size_t>(perm[2])]});
      while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  };

  for_each_partition(table, budget, [&](const ClassPartition& partition) {
    const std::size_t rows = partition.size();
    std::vector<std::vector<Triple>> opts(rows);
    for (std::size_t i = 0; i < rows; ++i) opts[i] = options_for(partition[i]);

    // Choose which blocks go to the split rows, in lexicographic order.
    std::vector<bool> pick(rows, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(s), true);
    do {
      budget.tick();
      std::vector<std::size_t> chosen, rest;
      for (std::size_t i = 0; i < rows; ++i) (pick[i] ? chosen : rest).push_back(i);
      // Split blocks: their column-1 values must sum to zero (v odd).
      std::map<std::pair<int, int>, std::vector<std::size_t>> start;  // (sum col2, sum col3) -> choices
      std::vector<std::size_t> idx(s, 0);
      while (true) {
        std::int64_t s1 = 0, s2 = 0, s3 = 0;
        for (std::size_t q = 0; q < s; ++q) {
          const Triple& tr = opts[chosen[q]][idx[q]];
          s1 += tr[0];
          s2 += tr[1];
          s3 += tr[2];
        }
        if (mod(s1, v) == 0) start.try_emplace({mod(s2, v), mod(s3, v)}, idx);
        std::size_t q = 0;
        for (; q < s; ++q) {
          if (++idx[q] < opts[chosen[q]].size()) break;
          idx[q] = 0;
        }
        if (q == s) break;
      }
      if (start.empty()) continue;
      // Dynamic program over the remaining blocks on (column 2 sum, column 3 sum).
      const std::size_t states = static_cast<std::size_t>(v) * static_cast<std::size_t>(v);
      std::vector<std::vector<int>> parent(rest.size() + 1, std::vector<int>(states, -2));
      for (const auto& [key, _] : start) parent[0][static_cast<std::size_t>(key.first * v + key.second)] = -1;
      for (std::size_t d = 0; d < rest.size(); ++d) {
        budget.tick();
        for (std::size_t st = 0; st < states; ++st) {
          if (parent[d][st] == -2) continue;
          const int x2 = static_cast<int>(st) / v, x3 = static_cast<int>(st) % v;
          const auto& o = opts[rest[d]];
          for (std::size_t c = 0; c < o.size(); ++c) {
            const std::size_t nx = static_cast<std::size_t>(mod(x2 + o[c][1], v) * v + mod(x3 + o[c][2], v));
            if (parent[d + 1][nx] == -2) parent[d + 1][nx] = static_cast<int>(st * 64 + c);
          }
        }
      }
      if (parent[rest.size()][0] == -2) continue;
      // Walk back the choices.
      std::vector<Triple> rest_rows(rest.size());
      std::size_t st = 0;
      for (std::size_t d = rest.size(); d-- > 0;) {
        const int code = parent[d + 1][st];
        rest_rows[d] = opts[rest[d]][static_cast<std::size_t>(code % 64)];
        st = static_cast<std::size_t>(code / 64);
      }
      const auto& first = start.at({static_cast<int>(st) / v, static_cast<int>(st) % v});
      WeakArray a(ArrayContext::heffter(m, 3, 3, m, 1));
      std::size_t next_rest = 0;
      std::vector<int> split_sorted(split_rows.begin(), split_rows.end());
      for (int r = 1; r <= m; ++r) {
        const auto pos = std::find(split_rows.begin(), split_rows.end(), r);
        Triple tr;
        bool split = false;
        if (pos != split_rows.end()) {
          const std::size_t q = static_cast<std::size_t>(pos - split_rows.begin());
          tr = opts[chosen[q]][first[q]];
          split = true;
        } else {
          tr = rest_rows[next_rest++];
        }
        a.set(r, 1, SignedEntry{mod(tr[0], v), split});
        a.set(r, 2, SignedEntry{mod(tr[1], v), false});
        a.set(r, 3, SignedEntry{mod(tr[2], v), false});
      }
      answer = std::move(a);
      return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
  });
  return answer;
}

}  // namespace heffter
