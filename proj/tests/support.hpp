// Shared helpers for the test binaries: fixture access, seeded randomness and small
// brute-force oracles written independently of the library's search code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "heffter/io.hpp"
#include "heffter/verify.hpp"

#ifndef HEFFTER_TEST_DATA_DIR
#error "HEFFTER_TEST_DATA_DIR must point at the data directory"
#endif

namespace heffter::test {

inline std::filesystem::path data_dir() { return HEFFTER_TEST_DATA_DIR; }
inline std::filesystem::path fixture_path(const std::string& name) { return data_dir() / "fixtures" / name; }
inline WeakArray fixture(const std::string& name) { return io::load(fixture_path(name)); }

struct FixtureEntry {
  std::string file;
  Mode mode;
  bool integer = false;
};

inline std::vector<FixtureEntry> manifest() {
  std::ifstream in(data_dir() / "fixtures" / "manifest.txt");
  std::vector<FixtureEntry> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line.front() == '#') continue;
    std::istringstream row(line);
    std::string file, mode, integer;
    row >> file >> mode >> integer;
    out.push_back({file, parse_mode(mode), integer == "yes"});
  }
  return out;
}

/// Fixtures over Z_v with t = 1 (the embedding and tour setting).
inline std::vector<std::string> t1_fixtures() {
  return {"wh_3x4.txt", "h_8_6.txt", "h_8_6_row_flip.txt", "h_8_6_lines.txt", "h_8_6_lines_subset.txt"};
}

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x9e3779b97f4a7c15ULL ^ salt); }

inline int pick(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

// ---------------------------------------------------------------------------------------------
// Oracles. Plain integer arithmetic on the text form; nothing here calls into verify/search.

struct PlainCell {
  int r, c, row_value, col_value;  // residues in [0, v)
};

inline std::vector<PlainCell> plain_cells(const WeakArray& a) {
  const int v = a.modulus();
  std::vector<PlainCell> out;
  for (int r = 1; r <= a.rows(); ++r)
    for (int c = 1; c <= a.cols(); ++c)
      if (const auto& e = a.at(r, c)) {
        const int rv = ((e->a % v) + v) % v;
        out.push_back({r, c, rv, e->split ? (v - rv) % v : rv});
      }
  return out;
}

/// Weak (relative) Heffter conditions: line counts h/k, each class of Z_v outside J exactly
/// once, zero row sums with row signs and zero column sums with column signs.
inline bool oracle_is_weak(const WeakArray& a, int h, int k) {
  const int v = a.modulus(), t = a.context().t;
  const auto cells = plain_cells(a);
  std::vector<int> row_count(static_cast<std::size_t>(a.rows() + 1)), col_count(static_cast<std::size_t>(a.cols() + 1));
  std::vector<long long> row_sum(row_count.size()), col_sum(col_count.size());
  std::multiset<int> classes;
  for (const auto& x : cells) {
    ++row_count[static_cast<std::size_t>(x.r)];
    ++col_count[static_cast<std::size_t>(x.c)];
    row_sum[static_cast<std::size_t>(x.r)] += x.row_value;
    col_sum[static_cast<std::size_t>(x.c)] += x.col_value;
    classes.insert(std::min(x.row_value, v - x.row_value));
  }
  for (int r = 1; r <= a.rows(); ++r)
    if (row_count[static_cast<std::size_t>(r)] != h || row_sum[static_cast<std::size_t>(r)] % v != 0) return false;
  for (int c = 1; c <= a.cols(); ++c)
    if (col_count[static_cast<std::size_t>(c)] != k || col_sum[static_cast<std::size_t>(c)] % v != 0) return false;
  std::multiset<int> expected;
  for (int x = 1; x <= v / 2; ++x)
    if (x % (v / t) != 0) expected.insert(x);
  return classes == expected;
}

/// Whether some sign choice on the absolute values makes every row and column sum vanish mod v.
/// Exhaustive over 2^cells; only for small arrays.
inline bool oracle_has_classical_signing(const WeakArray& a) {
  const int v = a.modulus();
  const auto cells = plain_cells(a);
  const auto n = cells.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<long long> rs(static_cast<std::size_t>(a.rows() + 1)), cs(static_cast<std::size_t>(a.cols() + 1));
    for (std::size_t i = 0; i < n; ++i) {
      const int x = cells[i].row_value;
      const int value = (mask >> i) & 1 ? v - x : x;
      rs[static_cast<std::size_t>(cells[i].r)] += value;
      cs[static_cast<std::size_t>(cells[i].c)] += value;
    }
    bool ok = true;
    for (int r = 1; r <= a.rows() && ok; ++r) ok = rs[static_cast<std::size_t>(r)] % v == 0;
    for (int c = 1; c <= a.cols() && ok; ++c) ok = cs[static_cast<std::size_t>(c)] % v == 0;
    if (ok) return true;
  }
  return false;
}

/// Number of Heffter systems D_t(v;k) counted up to negating whole blocks: partitions of the
/// classes into k-sets, weighted by the number of zero-sum signings with the least class positive.
inline long long oracle_system_count(int v, int t, int k) {
  std::vector<int> classes;
  for (int x = 1; x <= v / 2; ++x)
    if (x % (v / t) != 0 && 2 * x != v) classes.push_back(x);
  std::vector<bool> used(classes.size());
  auto signings = [&](const std::vector<int>& block) {
    long long count = 0;
    const auto free_bits = block.size() - 1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_bits); ++m) {
      long long s = block[0];
      for (std::size_t i = 1; i < block.size(); ++i) s += (m >> (i - 1)) & 1 ? -block[i] : block[i];
      if (((s % v) + v) % v == 0) ++count;
    }
    return count;
  };
  std::vector<int> block;
  auto rec = [&](auto&& self) -> long long {
    std::size_t first = 0;
    while (first < classes.size() && used[first]) ++first;
    if (first == classes.size()) return 1;
    used[first] = true;
    block.assign(1, classes[first]);
    long long total = 0;
    auto choose = [&](auto&& inner, std::size_t from) -> void {
      if (static_cast<int>(block.size()) == k) {
        const long long w = signings(block);
        if (w) {
          const auto saved = block;
          total += w * self(self);
          block = saved;
        }
        return;
      }
      for (std::size_t i = from; i < classes.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        block.push_back(classes[i]);
        inner(inner, i + 1);
        block.pop_back();
        used[i] = false;
      }
    };
    choose(choose, first + 1);
    used[first] = false;
    return total;
  };
  return rec(rec);
}

/// The tour step written straight from its definition, on the text grid.
inline std::vector<std::vector<int>> oracle_tour(const WeakArray& a, const std::vector<int>& C, const std::vector<int>& R) {
  auto next_in = [](const std::vector<int>& line, int at, int dir) {
    const auto n = static_cast<int>(line.size());
    const auto pos = static_cast<int>(std::find(line.begin(), line.end(), at) - line.begin());
    return line[static_cast<std::size_t>(((pos + dir) % n + n) % n)];
  };
  auto split = [&](int i, int j) { return a.at(i, j)->split; };
  std::vector<int> first_row = a.filled_columns(1);
  int i = 1, j = first_row.front(), t = split(1, j) ? -1 : 1;
  std::vector<std::vector<int>> out;
  const std::vector<int> start{i, j, t};
  do {
    out.push_back({i, j, t});
    const int i2 = next_in(a.filled_rows(j), i, C[static_cast<std::size_t>(j - 1)] * t);
    if (split(i2, j)) t = -t;
    i = i2;
    const int j2 = next_in(a.filled_columns(i), j, R[static_cast<std::size_t>(i - 1)] * t);
    if (split(i, j2)) t = -t;
    j = j2;
  } while (std::vector<int>{i, j, t} != start && out.size() <= 4 * static_cast<std::size_t>(a.filled_count()));
  return out;
}

}  // namespace heffter::test
