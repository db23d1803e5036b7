#include "heffter/embed.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "heffter/verify.hpp"

namespace heffter {

LineOrdering orderings_from_orientations(const WeakArray& a, const std::vector<int>& col_orient,
                                         const std::vector<int>& row_orient) {
  if (static_cast<int>(col_orient.size()) != a.cols() || static_cast<int>(row_orient.size()) != a.rows())
    throw Error("orientation lengths must match the array (" + std::to_string(a.cols()) + " columns, " +
                std::to_string(a.rows()) + " rows)");
  LineOrdering ord;
  for (int r = 1; r <= a.rows(); ++r) {
    auto cols = a.filled_columns(r);
    const int o = row_orient[static_cast<std::size_t>(r - 1)];
    if (o != 1 && o != -1) throw Error("orientations must be +1 or -1");
    if (o < 0) std::reverse(cols.begin(), cols.end());
    ord.rows.push_back(std::move(cols));
  }
  for (int c = 1; c <= a.cols(); ++c) {
    auto rows = a.filled_rows(c);
    const int o = col_orient[static_cast<std::size_t>(c - 1)];
    if (o != 1 && o != -1) throw Error("orientations must be +1 or -1");
    if (o < 0) std::reverse(rows.begin(), rows.end());
    ord.cols.push_back(std::move(rows));
  }
  return ord;
}

OmegaTables omega_tables(const WeakArray& a, const LineOrdering& ord) {
  const int v = a.modulus();
  OmegaTables t;
  t.row_next.assign(static_cast<std::size_t>(v), 0);
  t.row_prev.assign(static_cast<std::size_t>(v), 0);
  t.col_next.assign(static_cast<std::size_t>(v), 0);
  t.col_prev.assign(static_cast<std::size_t>(v), 0);
  if (static_cast<int>(ord.rows.size()) != a.rows() || static_cast<int>(ord.cols.size()) != a.cols())
    throw Error("ordering does not match the array");
  for (int r = 1; r <= a.rows(); ++r) {
    const auto& cyc = ord.rows[static_cast<std::size_t>(r - 1)];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& here = a.at(r, cyc[i]);
      const auto& there = a.at(r, cyc[(i + 1) % cyc.size()]);
      if (!here || !there) throw Error("ordering visits an empty cell in row " + std::to_string(r));
      t.row_next[static_cast<std::size_t>(here->row_value())] = there->row_value();
      t.row_prev[static_cast<std::size_t>(there->row_value())] = here->row_value();
    }
  }
  for (int c = 1; c <= a.cols(); ++c) {
    const auto& cyc = ord.cols[static_cast<std::size_t>(c - 1)];
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& here = a.at(cyc[i], c);
      const auto& there = a.at(cyc[(i + 1) % cyc.size()], c);
      if (!here || !there) throw Error("ordering visits an empty cell in column " + std::to_string(c));
      t.col_next[static_cast<std::size_t>(here->column_value(v))] = there->column_value(v);
      t.col_prev[static_cast<std::size_t>(there->column_value(v))] = here->column_value(v);
    }
  }
  return t;
}

namespace {

// Residue-level trace: a_i as residues, mu_i as +-1.
struct RawTrace {
  std::vector<int> a;
  std::vector<int> mu;
};

int apply(const std::vector<int>& table, int x) {
  const int y = table[static_cast<std::size_t>(x)];
  if (y == 0) throw Error("ordering is undefined on residue " + std::to_string(x));
  return y;
}

RawTrace raw_trace(const WeakArray& a, const LineOrdering& ord, std::size_t length) {
  const int v = a.modulus();
  const auto tables = omega_tables(a, ord);
  const auto lam = lambda_table(a);
  const auto first = a.filled_columns(1);
  if (first.empty()) throw Error("row 1 is empty");
  RawTrace t;
  if (length == 0) return t;
  int x = a.at(1, first.front())->row_value();
  int mu = lam[static_cast<std::size_t>(x)];
  t.a.push_back(x);
  t.mu.push_back(mu);
  for (std::size_t i = 1; i < length; ++i) {
    const int l = lam[static_cast<std::size_t>(x)];
    if (i % 2 == 1) {  // i-th term is odd-indexed (1-based)
      const int arg = l > 0 ? x : neg_mod(x, v);
      x = neg_mod(apply(mu > 0 ? tables.col_next : tables.col_prev, arg), v);
    } else {
      const int arg = l > 0 ? neg_mod(x, v) : x;
      x = apply(mu > 0 ? tables.row_next : tables.row_prev, arg);
    }
    mu *= lam[static_cast<std::size_t>(x)];
    t.a.push_back(x);
    t.mu.push_back(mu);
  }
  return t;
}

// Smallest p dividing `bound` with seq[j + p] == seq[j] wherever both exist.
template <typename T>
std::size_t min_period(const std::vector<T>& seq, std::size_t bound) {
  for (std::size_t p = 1; p <= bound; ++p) {
    if (bound % p != 0) continue;
    bool ok = true;
    for (std::size_t j = 0; j + p < seq.size() && ok; ++j) ok = seq[j + p] == seq[j];
    if (ok) return p;
  }
  return bound;
}

std::size_t state_orbit_length(const WeakArray& a, const LineOrdering& ord) {
  // (a_i, mu_i, parity of i) evolves by a deterministic step on finitely many states,
  // and the sequence is purely periodic from i = 1 (each step is invertible).
  const std::size_t limit = 4 * static_cast<std::size_t>(a.modulus()) + 4;
  const auto t = raw_trace(a, ord, limit + 1);
  for (std::size_t p = 2; p <= limit; p += 2)
    if (t.a[p] == t.a[0] && t.mu[p] == t.mu[0]) return p;
  throw Error("trace sequence does not return to its start");
}

}  // namespace

TraceSequence trace_sequence(const WeakArray& a, const LineOrdering& ord, std::size_t length) {
  const auto raw = raw_trace(a, ord, length);
  TraceSequence t;
  for (std::size_t i = 0; i < raw.a.size(); ++i) {
    t.a.push_back(symmetric(raw.a[i], a.modulus()));
    t.mu.push_back(raw.mu[i]);
  }
  return t;
}

CompatibilityReport compatibility_report(const WeakArray& a, const LineOrdering& ord) {
  const int v = a.modulus();
  const std::size_t nk = static_cast<std::size_t>(a.filled_count());
  const std::size_t orbit = state_orbit_length(a, ord);
  const auto raw = raw_trace(a, ord, 4 * orbit + 2 * nk);

  std::vector<std::pair<int, int>> pairs, odd;
  std::vector<int> products;
  for (std::size_t i = 0; i < raw.a.size(); ++i) {
    pairs.emplace_back(raw.a[i], raw.mu[i]);
    products.push_back(raw.mu[i] > 0 ? raw.a[i] : neg_mod(raw.a[i], v));
    if (i % 2 == 0) odd.push_back(pairs.back());
  }
  CompatibilityReport r;
  r.pair_period = min_period(pairs, orbit);
  r.product_period = min_period(products, orbit);
  r.odd_period = min_period(odd, orbit);
  r.pair_criterion = r.pair_period == 2 * nk;
  r.product_criterion = r.product_period == 2 * nk;
  r.odd_criterion = r.odd_period == nk;
  std::set<int> seen(products.begin(), products.begin() + static_cast<std::ptrdiff_t>(2 * nk));
  r.distinct_criterion = seen.size() == 2 * nk;
  r.compatible = r.pair_criterion;
  if (r.pair_criterion != r.distinct_criterion || r.pair_criterion != r.product_criterion ||
      r.pair_criterion != r.odd_criterion)
    throw Error("compatibility criteria disagree (pair period " + std::to_string(r.pair_period) + ", product period " +
                std::to_string(r.product_period) + ", odd period " + std::to_string(r.odd_period) + ")");
  return r;
}

namespace {

struct CheckedTrace {
  int v = 0;
  std::size_t len = 0;
  RawTrace raw;
};

CheckedTrace checked_trace(const WeakArray& a, const LineOrdering& ord) {
  CheckedTrace out;
  out.v = a.modulus();
  if (a.context().t != 1) throw Error("embeddings are built for t = 1 only");
  out.len = 2 * static_cast<std::size_t>(a.filled_count());
  if (static_cast<int>(out.len) + 1 != out.v) throw Error("array does not cover Z_v \\ {0}");
  if (!compatibility_report(a, ord).compatible) throw Error("orderings are not compatible");
  out.raw = raw_trace(a, ord, out.len);
  return out;
}

RotationSystem from_residues(int v, const std::vector<int>& residues) {
  RotationSystem rs;
  rs.v = v;
  rs.next.assign(static_cast<std::size_t>(v), 0);
  rs.prev.assign(static_cast<std::size_t>(v), 0);
  rs.epsilon.assign(static_cast<std::size_t>(v), 0);
  const std::size_t len = residues.size();
  for (std::size_t i = 0; i < len; ++i) {
    rs.cycle.push_back(symmetric(residues[i], v));
    rs.next[static_cast<std::size_t>(residues[i])] = residues[(i + 1) % len];
    rs.prev[static_cast<std::size_t>(residues[(i + 1) % len])] = residues[i];
  }
  return rs;
}

}  // namespace

RotationSystem rotation_and_signature(const WeakArray& a, const LineOrdering& ord) {
  const auto ct = checked_trace(a, ord);
  const int v = ct.v;
  std::vector<int> residues;
  for (std::size_t i = 0; i < ct.len; ++i)
    residues.push_back(ct.raw.mu[i] > 0 ? ct.raw.a[i] : neg_mod(ct.raw.a[i], v));
  auto rs = from_residues(v, residues);
  std::vector<int> occurrences(static_cast<std::size_t>(v), 0);
  for (int x : ct.raw.a) ++occurrences[static_cast<std::size_t>(x)];
  for (int x = 1; x < v; ++x) rs.epsilon[static_cast<std::size_t>(x)] = occurrences[static_cast<std::size_t>(x)] == 1 ? 1 : -1;
  return rs;
}

RotationSystem face_rotation(const WeakArray& a, const LineOrdering& ord) {
  const auto ct = checked_trace(a, ord);
  const int v = ct.v;
  const std::size_t len = ct.len;
  std::vector<int> residues;
  // Each term is read in the local sense it is reached with, before a split cell flips it.
  for (std::size_t i = 0; i < len; ++i) {
    const int sense = ct.raw.mu[(i + len - 1) % len];
    residues.push_back(sense > 0 ? ct.raw.a[i] : neg_mod(ct.raw.a[i], v));
  }
  auto rs = from_residues(v, residues);
  // Odd steps go row -> column, even steps column -> row; an edge crossed twice the same way is twisted.
  std::vector<int> first_parity(static_cast<std::size_t>(v), -1);
  for (std::size_t i = 0; i < len; ++i) {
    const int x = ct.raw.a[i];
    const int cls = std::min(x, v - x);
    const int parity = static_cast<int>(i % 2);
    auto& seen = first_parity[static_cast<std::size_t>(cls)];
    if (seen < 0) {
      seen = parity;
    } else {
      const int e = seen == parity ? -1 : 1;
      rs.epsilon[static_cast<std::size_t>(cls)] = e;
      rs.epsilon[static_cast<std::size_t>(v - cls)] = e;
    }
  }
  return rs;
}

std::vector<int> row_face(const WeakArray& a, const LineOrdering& ord, int value, int x) {
  const int v = a.modulus();
  const auto tables = omega_tables(a, ord);
  const int start = mod(value, v);
  if (tables.row_next[static_cast<std::size_t>(start)] == 0)
    throw Error(std::to_string(value) + " is not a row-signed value");
  std::vector<int> face{mod(x, v)};
  int step = start;
  int pos = mod(x, v);
  while (true) {
    pos = mod(pos + step, v);
    step = tables.row_next[static_cast<std::size_t>(step)];
    if (step == start) break;
    face.push_back(pos);
  }
  return face;
}

std::vector<int> column_face(const WeakArray& a, const LineOrdering& ord, int value, int x) {
  const int v = a.modulus();
  const auto tables = omega_tables(a, ord);
  const int start = neg_mod(mod(value, v), v);  // -a, a column-signed value
  if (tables.col_prev[static_cast<std::size_t>(start)] == 0)
    throw Error(std::to_string(-value) + " is not a column-signed value");
  // S_j = sum_{i=1..j} w_c^{-i}(-a); the column has k cells, so j runs up to k-1.
  std::vector<int> partial;
  std::int64_t sum = 0;
  for (int y = tables.col_prev[static_cast<std::size_t>(start)]; y != start; y = tables.col_prev[static_cast<std::size_t>(y)]) {
    sum += y;
    partial.push_back(mod(x + sum, v));
  }
  std::vector<int> face{mod(x, v)};
  for (auto it = partial.rbegin(); it != partial.rend(); ++it) face.push_back(*it);
  return face;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
  if (cycle.empty()) return cycle;
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < cycle.size(); ++s) {
      std::vector<int> cand(cycle.begin() + static_cast<std::ptrdiff_t>(s), cycle.end());
      cand.insert(cand.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(s));
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

EmbeddingReport trace_all_faces(const RotationSystem& rs) {
  const int v = rs.v;
  if (v < 3 || static_cast<int>(rs.next.size()) != v) throw Error("malformed rotation system");
  // State id: ((x, y), sigma) -> ((x * v + y) * 2 + (sigma < 0)).
  const std::size_t states = static_cast<std::size_t>(v) * static_cast<std::size_t>(v) * 2;
  auto id = [v](int x, int y, int sigma) {
    return (static_cast<std::size_t>(x) * static_cast<std::size_t>(v) + static_cast<std::size_t>(y)) * 2 + (sigma < 0 ? 1 : 0);
  };
  auto eps = [&](int x, int y) { return rs.epsilon[static_cast<std::size_t>(mod(y - x, v))]; };
  std::vector<int> orbit_of(states, -1);
  std::vector<std::vector<int>> orbits;        // vertex sequences
  std::vector<std::size_t> orbit_start;        // a state of each orbit
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      if (x == y) continue;
      for (int sigma : {1, -1}) {
        if (orbit_of[id(x, y, sigma)] >= 0) continue;
        const int o = static_cast<int>(orbits.size());
        std::vector<int> cycle;
        int cx = x, cy = y, cs = sigma;
        while (orbit_of[id(cx, cy, cs)] < 0) {
          orbit_of[id(cx, cy, cs)] = o;
          cycle.push_back(cx);
          const int ns = cs * eps(cx, cy);
          const int d = mod(cx - cy, v);
          const int turn = ns > 0 ? rs.next[static_cast<std::size_t>(d)] : rs.prev[static_cast<std::size_t>(d)];
          const int nx = cy;
          cy = mod(cy + turn, v);
          cx = nx;
          cs = ns;
        }
        if (cx != x || cy != y || cs != sigma) throw Error("face tracing is not a permutation of states");
        orbits.push_back(std::move(cycle));
        orbit_start.push_back(id(x, y, sigma));
      }
    }
  // Pair each orbit with the orbit of its mirrored start state.
  std::vector<int> partner(orbits.size(), -1);
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    const std::size_t s = orbit_start[o];
    const int sigma = (s & 1) ? -1 : 1;
    const int x = static_cast<int>((s / 2) / static_cast<std::size_t>(v));
    const int y = static_cast<int>((s / 2) % static_cast<std::size_t>(v));
    const int mirror = orbit_of[id(y, x, -sigma * eps(x, y))];
    if (mirror == static_cast<int>(o)) throw Error("face orbit is its own mirror");
    if (partner[o] >= 0 && partner[o] != mirror) throw Error("face orbits do not pair up");
    partner[o] = mirror;
    if (partner[static_cast<std::size_t>(mirror)] >= 0 && partner[static_cast<std::size_t>(mirror)] != static_cast<int>(o))
      throw Error("face orbits do not pair up");
    partner[static_cast<std::size_t>(mirror)] = static_cast<int>(o);
  }

  EmbeddingReport report;
  report.vertices = v;
  report.edges = static_cast<long long>(v) * (v - 1) / 2;
  for (std::size_t o = 0; o < orbits.size(); ++o)
    if (static_cast<int>(o) < partner[o]) report.faces.push_back(canonical_cycle(orbits[o]));
  std::sort(report.faces.begin(), report.faces.end());
  report.chi = report.vertices - report.edges + static_cast<long long>(report.faces.size());

  // Balance: vertices two-colourable so that epsilon(xy) = c(x) c(y) for every edge.
  std::vector<int> parent(static_cast<std::size_t>(v)), parity(static_cast<std::size_t>(v), 0);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, int u) -> std::pair<int, int> {
    if (parent[static_cast<std::size_t>(u)] == u) return {u, 0};
    auto [root, p] = self(self, parent[static_cast<std::size_t>(u)]);
    parent[static_cast<std::size_t>(u)] = root;
    parity[static_cast<std::size_t>(u)] ^= p;
    return {root, parity[static_cast<std::size_t>(u)]};
  };
  bool balanced = true;
  for (int x = 0; x < v && balanced; ++x)
    for (int y = x + 1; y < v && balanced; ++y) {
      const int want = eps(x, y) < 0 ? 1 : 0;
      auto [rx, px] = find(find, x);
      auto [ry, py] = find(find, y);
      if (rx == ry) {
        balanced = (px ^ py) == want;
      } else {
        parent[static_cast<std::size_t>(rx)] = ry;
        parity[static_cast<std::size_t>(rx)] = px ^ py ^ want;
      }
    }
  report.orientable_balance = balanced;
  report.orientable_signature = std::all_of(rs.epsilon.begin() + 1, rs.epsilon.end(), [](int e) { return e == 1; });
  if (report.orientable_balance != report.orientable_signature) throw Error("orientability criteria disagree");
  report.orientable = report.orientable_balance;
  if (report.orientable)
    report.genus = (2 - report.chi) / 2;
  else
    report.crosscap = 2 - report.chi;
  report.regular = regularity_check(report);
  return report;
}

bool regularity_check(const EmbeddingReport& report) {
  const int v = report.vertices;
  const std::set<std::vector<int>> faces(report.faces.begin(), report.faces.end());
  for (const auto& f : report.faces) {
    std::vector<int> moved;
    for (int x : f) moved.push_back(mod(x + 1, v));
    if (!faces.count(canonical_cycle(moved))) return false;
  }
  return true;
}

EmbeddingReport archdeacon_embedding(const WeakArray& a, const LineOrdering& ord) {
  return trace_all_faces(face_rotation(a, ord));
}

std::vector<int> EmbeddingReport::face_lengths() const {
  std::vector<int> out;
  for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
  return out;
}

std::string EmbeddingReport::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["vertices"] = vertices;
  j["edges"] = edges;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& f : faces) arr.push_back({{"length", f.size()}, {"cycle", f}});
  j["faces"] = std::move(arr);
  j["chi"] = chi;
  j["orientable"] = orientable;
  if (orientable)
    j["genus"] = genus;
  else
    j["crosscap"] = crosscap;
  j["regular"] = regular;
  return j.dump(indent);
}

std::string EmbeddingReport::to_text() const {
  std::map<int, int> by_length;
  for (const auto& f : faces) ++by_length[static_cast<int>(f.size())];
  std::ostringstream out;
  out << "vertices " << vertices << "\nedges " << edges << "\nfaces " << faces.size();
  for (const auto& [len, count] : by_length) out << "\n  length " << len << ": " << count;
  out << "\nchi " << chi << "\norientable " << (orientable ? "yes" : "no") << '\n';
  if (orientable)
    out << "genus " << genus << '\n';
  else
    out << "crosscap " << crosscap << '\n';
  out << "regular " << (regular ? "yes" : "no") << '\n';
  return out.str();
}

}  // namespace heffter
