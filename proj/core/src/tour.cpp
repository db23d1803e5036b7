#include "heffter/tour.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "heffter/budget.hpp"
#include "heffter/modular.hpp"

namespace heffter {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<int> parse_signs(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int x = 0;
    const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc{} || p != item.data() + item.size() || (x != 1 && x != -1))
      throw Error("orientation entries must be 1 or -1, got '" + std::string(item) + "'");
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

void check_orientations(const WeakArray& a, const Orientations& o) {
  if (static_cast<int>(o.C.size()) != a.cols() || static_cast<int>(o.R.size()) != a.rows())
    throw Error("orientations need " + std::to_string(a.cols()) + " column and " + std::to_string(a.rows()) +
                " row entries");
}

int step_along(const std::vector<int>& line, int from, int direction) {
  const auto it = std::find(line.begin(), line.end(), from);
  if (it == line.end()) throw Error("tour state is not on a filled cell");
  if (line.size() < 2) throw Error("a line with a single filled cell has no successor");
  const auto n = static_cast<std::ptrdiff_t>(line.size());
  const auto pos = it - line.begin();
  return line[static_cast<std::size_t>((pos + (direction > 0 ? 1 : n - 1)) % n)];
}

int copy_after(const WeakArray& a, int i, int j, int t) { return a.at(i, j)->split ? -t : t; }

}  // namespace

std::string Orientations::to_string() const { return join(C) + "/" + join(R); }

Orientations parse_orientations(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error("orientations must look like C/R, e.g. -1,-1,1,1/1,1,1");
  return Orientations{parse_signs(text.substr(0, slash)), parse_signs(text.substr(slash + 1))};
}

std::string TourState::to_string() const {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(t) + ")";
}

TourState move_row(const WeakArray& a, const Orientations& o, const TourState& s) {
  check_orientations(a, o);
  const int j = step_along(a.filled_columns(s.i), s.j, o.R[static_cast<std::size_t>(s.i - 1)] * s.t);
  return {s.i, j, copy_after(a, s.i, j, s.t)};
}

TourState move_col(const WeakArray& a, const Orientations& o, const TourState& s) {
  check_orientations(a, o);
  const int i = step_along(a.filled_rows(s.j), s.i, o.C[static_cast<std::size_t>(s.j - 1)] * s.t);
  return {i, s.j, copy_after(a, i, s.j, s.t)};
}

TourState tour_step(const WeakArray& a, const Orientations& o, const TourState& s) {
  return move_row(a, o, move_col(a, o, s));
}

TourState tour_start(const WeakArray& a) {
  const auto cols = a.filled_columns(1);
  if (cols.empty()) throw Error("row 1 is empty");
  return {1, cols.front(), a.at(1, cols.front())->split ? -1 : 1};
}

TourList tour_list(const WeakArray& a, const Orientations& o) {
  check_orientations(a, o);
  // Precomputed lines keep the walk cheap; the step map is a bijection, so the start recurs.
  std::vector<std::vector<int>> row_lines, col_lines;
  for (int r = 1; r <= a.rows(); ++r) row_lines.push_back(a.filled_columns(r));
  for (int c = 1; c <= a.cols(); ++c) col_lines.push_back(a.filled_rows(c));
  const TourState start = tour_start(a);
  TourList out;
  TourState s = start;
  const std::size_t limit = 2 * static_cast<std::size_t>(a.filled_count());
  do {
    out.states.push_back(s);
    const int i = step_along(col_lines[static_cast<std::size_t>(s.j - 1)], s.i,
                             o.C[static_cast<std::size_t>(s.j - 1)] * s.t);
    const int t1 = copy_after(a, i, s.j, s.t);
    const int j = step_along(row_lines[static_cast<std::size_t>(i - 1)], s.j, o.R[static_cast<std::size_t>(i - 1)] * t1);
    s = {i, j, copy_after(a, i, j, t1)};
    if (out.states.size() > limit) throw Error("tour failed to close; the array is malformed");
  } while (s != start);
  out.solution = static_cast<int>(out.states.size()) == a.filled_count();
  return out;
}

std::vector<Orientations> solve_tour(const WeakArray& a, SolveStrategy strategy, const SolveOptions& options) {
  const int m = a.rows();
  const int n = a.cols();
  const int bits = m + n;
  if (bits >= 63) throw Error("too many lines for an exhaustive orientation search");
  const std::uint64_t total = std::uint64_t{1} << bits;
  auto decode = [&](std::uint64_t idx) {
    Orientations o;
    o.C.resize(static_cast<std::size_t>(n));
    o.R.resize(static_cast<std::size_t>(m));
    for (int p = 0; p < bits; ++p) {
      const int sign = (idx >> (bits - 1 - p)) & 1U ? -1 : 1;
      if (p < n)
        o.C[static_cast<std::size_t>(p)] = sign;
      else
        o.R[static_cast<std::size_t>(p - n)] = sign;
    }
    return o;
  };

  Budget budget(options.node_budget, options.time_budget_seconds);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex mu;
  std::set<std::uint64_t> found;
  std::exception_ptr failure;
  const unsigned threads = std::max(1U, options.threads);

  auto work = [&](unsigned id) {
    try {
      for (std::uint64_t idx = id; idx < total; idx += threads) {
        if (strategy == SolveStrategy::first && idx > best.load()) return;
        budget.tick();
        if (!tour_list(a, decode(idx)).solution) continue;
        std::lock_guard lock(mu);
        found.insert(idx);
        if (strategy == SolveStrategy::first) {
          if (idx < best.load()) best.store(idx);
          return;
        }
      }
    } catch (...) {
      std::lock_guard lock(mu);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Orientations> out;
  for (auto idx : found) {
    out.push_back(decode(idx));
    if (strategy == SolveStrategy::first) break;
  }
  return out;
}

std::optional<Cell> nonorientable_certificate(const TourList& tour) {
  std::set<std::pair<int, int>> plus, minus;
  for (const auto& s : tour.states) (s.t > 0 ? plus : minus).insert({s.i, s.j});
  for (const auto& [i, j] : plus)
    if (minus.count({i, j})) return Cell{i, j};
  return std::nullopt;
}

bool tour_matches_trace(const WeakArray& a, const Orientations& o, const TourList& tour) {
  const auto ord = orderings_from_orientations(a, o.C, o.R);
  const auto seq = trace_sequence(a, ord, 2 * tour.states.size());
  const int v = a.modulus();
  for (std::size_t l = 0; l < tour.states.size(); ++l) {
    const auto& s = tour.states[l];
    if (symmetric(a.at(s.i, s.j)->row_value(), v) != seq.a[2 * l]) return false;
    if (s.t != seq.mu[2 * l]) return false;
  }
  return true;
}

EmbeddingReport tour_to_embedding(const WeakArray& a, const Orientations& o) {
  if (!tour_list(a, o).solution) throw Error("orientations " + o.to_string() + " do not solve the tour problem");
  const auto ord = orderings_from_orientations(a, o.C, o.R);
  if (!compatibility_report(a, ord).compatible)
    throw Error("tour solution induces incompatible orderings; this is a defect");
  return archdeacon_embedding(a, ord);
}

}  // namespace heffter
