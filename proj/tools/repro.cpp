#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "heffter/classify.hpp"
#include "heffter/construct.hpp"
#include "heffter/embed.hpp"
#include "heffter/io.hpp"
#include "heffter/search.hpp"
#include "heffter/systems.hpp"
#include "heffter/tour.hpp"
#include "heffter/verify.hpp"

namespace heffter::cli {

namespace {

namespace fs = std::filesystem;

std::string classification_summary(int n, int k, const EnumerationOptions& options) {
  const auto table = classify(n, k, options);
  std::ostringstream os;
  os << "classical:";
  for (const auto& r : table.rows)
    if (r.classical.exists) os << ' ' << r.t;
  os << "\nstrictly-weak:";
  for (const auto& r : table.rows)
    if (r.strictly_weak.exists) os << ' ' << r.t;
  os << '\n';
  return os.str();
}

std::string nonexistence(int n, int t, SearchMode mode, const EnumerationOptions& options) {
  SearchSpec spec{ArrayContext::heffter(n, n, 3, 3, t), mode, SearchGoal::exists, options};
  const auto result = search_arrays(spec);
  return std::string(to_string(mode)) + " n=" + std::to_string(n) + " t=" + std::to_string(t) + ": " +
         (result.found ? "found" : "none") + "\n";
}

std::set<HeffterSystem> systems_from_file(const fs::path& path) {
  std::istringstream in(io::read_file(path));
  std::string header;
  std::getline(in, header);
  int v = 0, t = 0, k = 0;
  if (std::sscanf(header.c_str(), "v=%d t=%d k=%d", &v, &t, &k) != 3) throw Error("bad systems header in " + path.string());
  std::set<HeffterSystem> out;
  for (std::string line; std::getline(in, line);)
    if (line.find('{') != std::string::npos) out.insert(canonical_system(v, t, parse_blocks(line)));
  return out;
}

std::string systems_counts(const fs::path& data) {
  struct Case { int v, t, k; };
  const Case cases[] = {{21, 3, 3}, {32, 8, 3}, {27, 3, 3}, {30, 6, 3}, {27, 9, 3}, {36, 12, 3}};
  std::ostringstream os;
  for (const auto& c : cases)
    os << "v=" << c.v << " t=" << c.t << " k=" << c.k << ": " << enumerate_heffter_systems(c.v, c.t, c.k).size() << '\n';
  auto compare = [&](int v, int t, const char* file) {
    const auto found = enumerate_heffter_systems(v, t, 3);
    const std::set<HeffterSystem> mine(found.begin(), found.end());
    return mine == systems_from_file(data / "fixtures" / file) ? "match" : "mismatch";
  };
  os << "v=21 t=3 k=3 reference systems: " << compare(21, 3, "d3_21_3.txt") << '\n';
  os << "v=32 t=8 k=3 reference system: " << compare(32, 8, "d8_32_3.txt") << '\n';
  return os.str();
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

std::string tour_3x4(const fs::path& data) {
  const auto a = io::load(data / "fixtures" / "wh_3x4.txt");
  const auto o = parse_orientations("-1,-1,1,1/1,1,1");
  const auto tour = tour_list(a, o);
  std::ostringstream os;
  for (const auto& s : tour.states) os << s.to_string() << '\n';
  os << "solution: " << (tour.solution ? "yes" : "no") << '\n';
  const auto cert = nonorientable_certificate(tour);
  os << "certificate: " << (cert ? "(" + std::to_string(cert->r) + "," + std::to_string(cert->c) + ")" : "none") << '\n';
  return os.str();
}

std::string embed_3x4(const fs::path& data) {
  const auto a = io::load(data / "fixtures" / "wh_3x4.txt");
  const auto ord = orderings_from_orientations(a, {-1, -1, 1, 1}, {1, 1, 1});
  const auto seq = trace_sequence(a, ord, 24);
  const auto rs = rotation_and_signature(a, ord);
  std::vector<int> plus;
  for (int x = 1; x < rs.v; ++x)
    if (rs.epsilon[static_cast<std::size_t>(x)] > 0) plus.push_back(symmetric(x, rs.v));
  std::sort(plus.begin(), plus.end());
  const auto report = archdeacon_embedding(a, ord);
  std::ostringstream os;
  os << "a: " << join(seq.a) << '\n';
  os << "mu: " << join(seq.mu) << '\n';
  os << "rho0: " << join(rs.cycle) << '\n';
  os << "epsilon +1: " << join(plus) << '\n';
  os << "orientable: " << (report.orientable ? "yes" : "no") << '\n';
  return os.str();
}

std::string k55_family() {
  constexpr int n = 9;
  const auto a = find_weak_with_split_cells(n, {1, 2, n});
  if (!a) return "no WH(9,3) with the required split cells\n";
  std::ostringstream os;
  os << "split cells:";
  for (const auto& c : theta_omega(*a).second) os << " (" << c.r << "," << c.c << ")";
  os << '\n';
  Orientations o{{1, -1, -1}, std::vector<int>(n, -1)};
  os << "orientations: " << o.to_string() << '\n';
  const auto tour = tour_list(*a, o);
  for (const auto& s : tour.states) os << s.to_string() << '\n';
  os << "tour length: " << tour.states.size() << '\n';
  const bool both = std::count(tour.states.begin(), tour.states.end(), TourState{1, 3, 1}) &&
                    std::count(tour.states.begin(), tour.states.end(), TourState{1, 3, -1});
  os << "contains (1,3,1) and (1,3,-1): " << (both ? "yes" : "no") << '\n';
  if (tour.solution) os << "orientable: " << (tour_to_embedding(*a, o).orientable ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace

const std::vector<std::string>& repro_targets() {
  static const std::vector<std::string> targets{"t33",     "t43",      "n34",       "systems-counts",
                                                "wh5-12", "tour-3x4", "embed-3x4", "k55-family"};
  return targets;
}

std::string run_repro(const std::string& target, const fs::path& data, std::string& golden,
                      const EnumerationOptions& options) {
  const auto golden_dir = data / "golden";
  if (target == "t33") {
    golden = io::read_file(golden_dir / "t33.txt");
    return classification_summary(3, 3, options);
  }
  if (target == "t43") {
    golden = io::read_file(golden_dir / "t43.txt");
    return classification_summary(4, 3, options);
  }
  if (target == "n34") {
    golden = io::read_file(golden_dir / "n34.txt");
    return nonexistence(3, 1, SearchMode::strictly_weak, options) + nonexistence(4, 1, SearchMode::strictly_weak, options) +
           nonexistence(3, 9, SearchMode::weak, options) + nonexistence(4, 12, SearchMode::weak, options);
  }
  if (target == "systems-counts") {
    golden = io::read_file(golden_dir / "systems-counts.txt");
    return systems_counts(data);
  }
  if (target == "wh5-12") {
    golden = io::read_file(data / "fixtures" / "wh5_12_5.txt");
    return io::format_text(assemble_wh5(12));
  }
  if (target == "tour-3x4") {
    golden = io::read_file(golden_dir / "tour-3x4.txt");
    return tour_3x4(data);
  }
  if (target == "embed-3x4") {
    golden = io::read_file(golden_dir / "embed-3x4.txt");
    return embed_3x4(data);
  }
  if (target == "k55-family") {
    golden = io::read_file(golden_dir / "k55-family.txt");
    return k55_family();
  }
  throw Error("unknown repro target '" + target + "'");
}

}  // namespace heffter::cli
