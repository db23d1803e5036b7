#include "heffter/transforms.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>

#include "heffter/budget.hpp"
#include "heffter/verify.hpp"

namespace heffter {

std::vector<std::vector<std::size_t>> zero_sum_proper_subsets(std::span<const int> line, int v) {
  const std::size_t len = line.size();
  if (len == 0) throw Error("zero_sum_proper_subsets needs a nonempty line");
  if (len > 24) throw Error("line too long for subset enumeration");
  const std::uint32_t full = (1u << len) - 1;
  std::int64_t total = 0;
  for (int x : line) total += x;
  const bool line_zero = mod(total, v) == 0;
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    std::int64_t sum = 0;
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < len; ++i)
      if (mask & (1u << i)) {
        sum += line[i];
        subset.push_back(i);
      }
    if (mod(sum, v) != 0) continue;
    // The complement of a zero-sum subset of a zero-sum line is zero-sum too; keep the smaller side.
    if (subset.size() > len / 2 && line_zero) continue;
    out.push_back(std::move(subset));
  }
  return out;
}

std::vector<int> row_values(const WeakArray& a, int r) {
  std::vector<int> out;
  for (int c : a.filled_columns(r)) out.push_back(a.at(r, c)->row_value());
  return out;
}

std::vector<int> column_values(const WeakArray& a, int c) {
  std::vector<int> out;
  for (int r : a.filled_rows(c)) out.push_back(a.at(r, c)->column_value(a.modulus()));
  return out;
}

WeakArray flip_row_subset(const WeakArray& a, int row, std::span<const int> columns) {
  const int v = a.modulus();
  std::int64_t sum = 0;
  for (int c : columns) {
    if (!a.filled(row, c))
      throw Error("cell (" + std::to_string(row) + "," + std::to_string(c) + ") is not a filled cell of the row");
    sum += a.at(row, c)->row_value();
  }
  if (mod(sum, v) != 0) throw Error("selected row entries do not sum to zero");
  WeakArray out = a;
  for (int c : columns) {
    const auto e = *a.at(row, c);
    out.set(row, c, SignedEntry{neg_mod(e.a, v), !e.split});
  }
  return out;
}

WeakArray flip_column_subset(const WeakArray& a, int col, std::span<const int> rows) {
  const int v = a.modulus();
  std::int64_t sum = 0;
  for (int r : rows) {
    if (!a.filled(r, col))
      throw Error("cell (" + std::to_string(r) + "," + std::to_string(col) + ") is not a filled cell of the column");
    sum += a.at(r, col)->column_value(v);
  }
  if (mod(sum, v) != 0) throw Error("selected column entries do not sum to zero");
  WeakArray out = a;
  for (int r : rows) {
    const auto e = *a.at(r, col);
    out.set(r, col, SignedEntry{e.a, !e.split});
  }
  return out;
}

WeakArray flip_lines(const WeakArray& a, std::span<const int> rows, std::span<const int> cols) {
  const int v = a.modulus();
  WeakArray out = a;
  for (int r : rows)
    for (int c : out.filled_columns(r)) {
      const auto e = *out.at(r, c);
      out.set(r, c, SignedEntry{neg_mod(e.a, v), !e.split});
    }
  for (int c : cols)
    for (int r : out.filled_rows(c)) {
      const auto e = *out.at(r, c);
      out.set(r, c, SignedEntry{e.a, !e.split});
    }
  return out;
}

namespace {

// Sign search over the absolute values of a fixed fill pattern.
class SignSearch {
 public:
  SignSearch(const WeakArray& a, Budget& budget) : a_(a), v_(a.modulus()), budget_(budget) {
    const int m = a.rows();
    std::vector<int> row_ids(static_cast<std::size_t>(m));
    std::iota(row_ids.begin(), row_ids.end(), 1);
    std::vector<std::vector<std::vector<int>>> vectors(static_cast<std::size_t>(m) + 1);
    for (int r = 1; r <= m; ++r) vectors[static_cast<std::size_t>(r)] = row_sign_vectors(r);
    std::stable_sort(row_ids.begin(), row_ids.end(), [&](int x, int y) {
      return vectors[static_cast<std::size_t>(x)].size() < vectors[static_cast<std::size_t>(y)].size();
    });
    for (int r : row_ids) {
      rows_.push_back(Row{r, a.filled_columns(r), std::move(vectors[static_cast<std::size_t>(r)])});
      for (int c : rows_.back().cols) rows_.back().mags.push_back(canonical_class(a.at(r, c)->a, v_).rep);
    }
    build_reachability();
  }

  [[nodiscard]] std::size_t first_level_size() const { return rows_.empty() ? 0 : rows_.front().vectors.size(); }

  /// Runs the subtree under first-row choice `first`; calls `sink` on each completion until it returns false.
  template <typename Sink>
  bool run(std::size_t first, Sink&& sink) {
    std::vector<std::int64_t> partial(static_cast<std::size_t>(a_.cols()) + 1, 0);
    std::vector<const std::vector<int>*> chosen(rows_.size(), nullptr);
    return descend_choice(0, first, partial, chosen, sink);
  }

  [[nodiscard]] WeakArray build(const std::vector<const std::vector<int>*>& chosen) const {
    WeakArray b(a_.context());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Row& row = rows_[i];
      for (std::size_t j = 0; j < row.cols.size(); ++j)
        b.set(row.id, row.cols[j], SignedEntry{mod(static_cast<std::int64_t>((*chosen[i])[j]) * row.mags[j], v_), false});
    }
    return b;
  }

 private:
  struct Row {
    int id;
    std::vector<int> cols;
    std::vector<std::vector<int>> vectors;  // +-1 per filled cell, preferred first
    std::vector<int> mags{};
  };

  std::vector<std::vector<int>> row_sign_vectors(int r) const {
    const auto cols = a_.filled_columns(r);
    const std::size_t len = cols.size();
    if (len > 20) throw Error("row too long for sign enumeration");
    std::vector<int> mags, preferred;
    for (int c : cols) {
      const int x = a_.at(r, c)->a;
      const int rep = canonical_class(x, v_).rep;
      mags.push_back(rep);
      preferred.push_back(x == rep ? 1 : -1);
    }
    std::vector<std::pair<std::pair<int, std::uint32_t>, std::vector<int>>> found;
    for (std::uint32_t flips = 0; flips < (1u << len); ++flips) {
      std::int64_t sum = 0;
      std::vector<int> signs(len);
      for (std::size_t j = 0; j < len; ++j) {
        signs[j] = (flips & (1u << (len - 1 - j))) ? -preferred[j] : preferred[j];
        sum += static_cast<std::int64_t>(signs[j]) * mags[j];
      }
      if (mod(sum, v_) == 0) found.push_back({{std::popcount(flips), flips}, std::move(signs)});
    }
    std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::vector<int>> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
  }

  // reach_[d][c][x]: residue x is a signed sum of column c's magnitudes in rows_[d..].
  void build_reachability() {
    const int n = a_.cols();
    const std::size_t depth = rows_.size();
    reach_.assign(depth + 1, std::vector<std::vector<char>>(static_cast<std::size_t>(n) + 1,
                                                            std::vector<char>(static_cast<std::size_t>(v_), 0)));
    for (int c = 1; c <= n; ++c) reach_[depth][static_cast<std::size_t>(c)][0] = 1;
    for (std::size_t d = depth; d-- > 0;) {
      reach_[d] = reach_[d + 1];
      const Row& row = rows_[d];
      for (std::size_t j = 0; j < row.cols.size(); ++j) {
        const auto& next = reach_[d + 1][static_cast<std::size_t>(row.cols[j])];
        auto& cur = reach_[d][static_cast<std::size_t>(row.cols[j])];
        std::fill(cur.begin(), cur.end(), 0);
        for (int x = 0; x < v_; ++x)
          if (next[static_cast<std::size_t>(x)]) {
            cur[static_cast<std::size_t>(mod(x + row.mags[j], v_))] = 1;
            cur[static_cast<std::size_t>(mod(x - row.mags[j], v_))] = 1;
          }
      }
    }
  }

  [[nodiscard]] bool feasible(std::size_t depth, const std::vector<std::int64_t>& partial) const {
    for (int c = 1; c <= a_.cols(); ++c)
      if (!reach_[depth][static_cast<std::size_t>(c)][static_cast<std::size_t>(mod(-partial[static_cast<std::size_t>(c)], v_))])
        return false;
    return true;
  }

  template <typename Sink>
  bool descend_choice(std::size_t depth, std::size_t choice, std::vector<std::int64_t>& partial,
                      std::vector<const std::vector<int>*>& chosen, Sink& sink) {
    budget_.tick();
    const Row& row = rows_[depth];
    const auto& signs = row.vectors[choice];
    for (std::size_t j = 0; j < row.cols.size(); ++j)
      partial[static_cast<std::size_t>(row.cols[j])] += static_cast<std::int64_t>(signs[j]) * row.mags[j];
    chosen[depth] = &signs;
    bool keep_going = true;
    if (feasible(depth + 1, partial)) {
      if (depth + 1 == rows_.size()) {
        keep_going = sink(chosen);
      } else {
        const auto& next = rows_[depth + 1].vectors;
        for (std::size_t i = 0; i < next.size() && keep_going; ++i)
          keep_going = descend_choice(depth + 1, i, partial, chosen, sink);
      }
    }
    for (std::size_t j = 0; j < row.cols.size(); ++j)
      partial[static_cast<std::size_t>(row.cols[j])] -= static_cast<std::int64_t>(signs[j]) * row.mags[j];
    return keep_going;
  }

  const WeakArray& a_;
  int v_;
  Budget& budget_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::vector<char>>> reach_;
};

}  // namespace

StrictnessResult strictness_check(const WeakArray& a, const StrictnessOptions& options) {
  Budget budget(options.node_budget, 0);
  SignSearch search(a, budget);
  const std::size_t branches = search.first_level_size();
  std::vector<std::optional<WeakArray>> found(branches);

  auto explore = [&](std::size_t first) {
    search.run(first, [&](const auto& chosen) {
      found[first] = search.build(chosen);
      return false;
    });
  };

  if (options.threads <= 1 || branches <= 1) {
    for (std::size_t i = 0; i < branches; ++i) {
      explore(i);
      if (found[i]) break;
    }
  } else {
    // Every first-level subtree is explored to its first completion, so the chosen witness
    // (lowest branch index) does not depend on scheduling.
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < options.threads; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < branches; i = next++) explore(i);
      }));
    for (auto& f : workers) f.get();
  }

  StrictnessResult result;
  result.nodes = budget.nodes();
  for (auto& w : found)
    if (w) {
      result.witness = std::move(w);
      return result;
    }
  result.strictly_weak = true;
  return result;
}

std::vector<WeakArray> classical_completions(const WeakArray& a, std::size_t limit) {
  Budget budget;
  SignSearch search(a, budget);
  std::vector<WeakArray> out;
  for (std::size_t i = 0; i < search.first_level_size(); ++i) {
    const bool more = search.run(i, [&](const auto& chosen) {
      out.push_back(search.build(chosen));
      return limit == 0 || out.size() < limit;
    });
    if (!more) break;
  }
  return out;
}

}  // namespace heffter
