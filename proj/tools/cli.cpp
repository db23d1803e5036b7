#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heffter/budget.hpp"
#include "heffter/classify.hpp"
#include "heffter/construct.hpp"
#include "heffter/embed.hpp"
#include "heffter/io.hpp"
#include "heffter/search.hpp"
#include "heffter/systems.hpp"
#include "heffter/tour.hpp"
#include "heffter/transforms.hpp"
#include "heffter/verify.hpp"

#ifndef HEFFTER_DEFAULT_DATA_DIR
#define HEFFTER_DEFAULT_DATA_DIR "data"
#endif

namespace heffter::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
  std::string format;  // empty: the verb's default
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  unsigned threads = 1;
  std::string data_dir;

  [[nodiscard]] bool as_json(bool fallback = false) const { return format.empty() ? fallback : format == "json"; }
  [[nodiscard]] EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.threads = threads;
    o.node_budget = budget_nodes;
    o.time_budget_seconds = budget_seconds;
    return o;
  }
};

std::string cell_text(const Cell& c) { return "(" + std::to_string(c.r) + "," + std::to_string(c.c) + ")"; }

json verification_json(const VerificationReport& r) {
  json j;
  j["ok"] = r.ok;
  auto arr = json::array();
  for (const auto& c : r.conditions) arr.push_back({{"condition", to_string(c.condition)}, {"ok", c.ok}, {"detail", c.detail}});
  j["conditions"] = std::move(arr);
  return j;
}

int cmd_verify(const Globals& g, const std::string& file, const std::string& mode_name, bool integer, std::ostream& out) {
  const auto a = io::load(file);
  const auto mode = parse_mode(mode_name);
  const auto report = verify(a, mode);
  std::optional<VerificationReport> int_report;
  if (integer) int_report = verify_integer(a);
  const bool ok = report.ok && (!int_report || int_report->ok);
  if (g.as_json()) {
    json j;
    j["mode"] = to_string(mode);
    j["ok"] = ok;
    j["report"] = verification_json(report);
    if (int_report) j["integer"] = verification_json(*int_report);
    out << j.dump(2) << '\n';
  } else {
    out << "mode " << to_string(mode) << ": " << (report.ok ? "pass" : "FAIL") << '\n' << report.to_text();
    if (int_report) out << "integer: " << (int_report->ok ? "pass" : "FAIL") << '\n' << int_report->to_text();
  }
  return ok ? ExitCode::ok : ExitCode::failure;
}

int cmd_strictness(const Globals& g, const std::string& file, std::ostream& out, std::ostream& err) {
  const auto a = io::load(file);
  if (!verify(a, Mode::relative_weak).ok) {
    err << "input is not a weak (relative) Heffter array\n";
    return ExitCode::failure;
  }
  const auto result = strictness_check(a, {g.threads, g.budget_nodes});
  if (g.as_json()) {
    json j;
    j["strictly_weak"] = result.strictly_weak;
    j["nodes"] = result.nodes;
    if (result.witness) j["witness"] = io::format_text(*result.witness);
    out << j.dump(2) << '\n';
  } else if (result.strictly_weak) {
    out << "STRICTLY WEAK (complete search, " << result.nodes << " nodes)\n";
  } else {
    out << io::format_text(*result.witness);
  }
  // exit 1 means a classical signing exists; the witness is the evidence
  return result.strictly_weak ? ExitCode::ok : ExitCode::failure;
}

struct SearchArgs {
  int m = 3, n = 3, h = 3, k = 3, t = 1;
  std::string mode = "weak";
  std::string goal = "exists";
};

int cmd_search(const Globals& g, const SearchArgs& s, std::ostream& out) {
  SearchSpec spec{ArrayContext::heffter(s.m, s.n, s.h, s.k, s.t), parse_search_mode(s.mode), parse_search_goal(s.goal),
                  g.enumeration()};
  if (spec.goal == SearchGoal::enumerate) {
    std::size_t emitted = 0;
    const auto result = search_arrays(spec, [&](const WeakArray& a) {
      if (g.as_json())
        out << io::format_json(a) << '\n';
      else
        out << (emitted ? "\n" : "") << io::format_text(a);
      ++emitted;
      return true;
    });
    return result.count ? ExitCode::ok : ExitCode::failure;
  }
  const auto result = search_arrays(spec);
  if (g.as_json()) {
    json j;
    j["mode"] = to_string(spec.mode);
    j["goal"] = to_string(spec.goal);
    j["found"] = result.found;
    j["nodes"] = result.nodes;
    if (spec.goal == SearchGoal::count) {
      j["placements"] = result.placements;
      j["count"] = result.count;
    }
    if (result.witness) j["witness"] = io::format_text(*result.witness);
    out << j.dump(2) << '\n';
  } else if (spec.goal == SearchGoal::count) {
    out << "placements: " << result.placements << "\ncount: " << result.count << "\nnodes: " << result.nodes << '\n';
  } else if (result.witness) {
    out << io::format_text(*result.witness);
  } else {
    out << "none (complete search, " << result.nodes << " nodes)\n";
  }
  return result.found ? ExitCode::ok : ExitCode::failure;
}

int cmd_classify(const Globals& g, int n, int k, std::ostream& out) {
  const auto table = classify(n, k, g.enumeration());
  out << (g.as_json(true) ? table.to_json(2) + "\n" : table.to_text());
  return ExitCode::ok;
}

int cmd_systems(const Globals& g, int v, int t, int k, std::ostream& out) {
  const auto systems = enumerate_heffter_systems(v, t, k, g.enumeration());
  if (g.as_json()) {
    json j;
    j["v"] = v;
    j["t"] = t;
    j["k"] = k;
    auto arr = json::array();
    for (const auto& s : systems) arr.push_back(s.blocks);
    j["systems"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& s : systems) out << s.to_string() << '\n';
  }
  return ExitCode::ok;
}

int cmd_construct(const Globals& g, const std::string& family, int n, const std::string& stage, std::ostream& out) {
  if (family != "wh5") throw Error("unknown construction '" + family + "' (expected wh5)");
  const auto a = assemble_wh5(n, parse_wh5_stage(stage));
  out << (g.as_json() ? io::format_json(a, 2) + "\n" : io::format_text(a));
  return ExitCode::ok;
}

int cmd_tour(const Globals& g, const std::string& file, const std::string& orient, const std::string& solve, bool certify,
             std::ostream& out) {
  const auto a = io::load(file);
  if (!orient.empty()) {
    const auto o = parse_orientations(orient);
    const auto tour = tour_list(a, o);
    const auto cert = certify ? nonorientable_certificate(tour) : std::nullopt;
    if (g.as_json()) {
      json j;
      auto states = json::array();
      for (const auto& s : tour.states) states.push_back({s.i, s.j, s.t});
      j["states"] = std::move(states);
      j["length"] = tour.states.size();
      j["solution"] = tour.solution;
      if (certify) j["certificate"] = cert ? json{cert->r, cert->c} : json(nullptr);
      out << j.dump(2) << '\n';
    } else {
      for (const auto& s : tour.states) out << s.to_string() << '\n';
      out << "length " << tour.states.size() << (tour.solution ? " (solution)" : " (not a solution)") << '\n';
      if (certify) out << "certificate " << (cert ? cell_text(*cert) : "none") << '\n';
    }
    return tour.solution ? ExitCode::ok : ExitCode::failure;
  }
  const auto strategy = solve == "all" ? SolveStrategy::all : SolveStrategy::first;
  if (solve != "all" && solve != "first") throw Error("--solve expects 'all' or 'first'");
  const auto solutions = solve_tour(a, strategy, {g.threads, g.budget_nodes, g.budget_seconds});
  if (g.as_json()) {
    json j;
    auto arr = json::array();
    for (const auto& o : solutions) {
      json item{{"C", o.C}, {"R", o.R}};
      if (certify) {
        const auto cert = nonorientable_certificate(tour_list(a, o));
        item["certificate"] = cert ? json{cert->r, cert->c} : json(nullptr);
      }
      arr.push_back(std::move(item));
    }
    j["solutions"] = std::move(arr);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& o : solutions) {
      out << o.to_string();
      if (certify) {
        const auto cert = nonorientable_certificate(tour_list(a, o));
        out << " certificate " << (cert ? cell_text(*cert) : "none");
      }
      out << '\n';
    }
    if (solutions.empty()) out << "no solution\n";
  }
  return solutions.empty() ? ExitCode::failure : ExitCode::ok;
}

int cmd_embed(const Globals& g, const std::string& file, const std::string& orient, const std::string& report_format,
              std::ostream& out) {
  const auto a = io::load(file);
  const auto o = parse_orientations(orient);
  const auto ord = orderings_from_orientations(a, o.C, o.R);
  if (!compatibility_report(a, ord).compatible) {
    out << "orderings are not compatible\n";
    return ExitCode::failure;
  }
  const auto report = archdeacon_embedding(a, ord);
  const bool as_json = report_format.empty() ? g.as_json(true) : report_format == "json";
  out << (as_json ? report.to_json(2) + "\n" : report.to_text());
  return ExitCode::ok;
}

int cmd_repro(const Globals& g, const std::string& target, std::ostream& out) {
  const std::filesystem::path data = g.data_dir.empty() ? default_data_dir() : std::filesystem::path(g.data_dir);
  std::string golden;
  const auto produced = run_repro(target, data, golden, g.enumeration());
  out << produced;
  if (produced == golden) {
    out << "repro " << target << ": matches golden\n";
    return ExitCode::ok;
  }
  out << "repro " << target << ": MISMATCH\n";
  std::istringstream want(golden), got(produced);
  std::string w, h;
  for (int line = 1;; ++line) {
    const bool more_w = static_cast<bool>(std::getline(want, w));
    const bool more_h = static_cast<bool>(std::getline(got, h));
    if (!more_w && !more_h) break;
    if (!more_w) w = "<missing>";
    if (!more_h) h = "<missing>";
    if (w != h) out << "  line " << line << ": expected '" << w << "', got '" << h << "'\n";
  }
  return ExitCode::failure;
}

}  // namespace

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("HEFFTER_DATA_DIR"); env && *env) return env;
  return HEFFTER_DEFAULT_DATA_DIR;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak Heffter arrays: verification, search, constructions, tours and embeddings", "heffter"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the verb
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget-nodes", g.budget_nodes, "Node budget for searches (0 = unlimited)");
  app.add_option("--budget-seconds", g.budget_seconds, "Wall-clock budget for searches (0 = unlimited)");
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--data-dir", g.data_dir, "Fixture and golden-file directory");

  std::string file, mode = "weak";
  bool integer = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check the defining conditions of an array");
  verify_cmd->add_option("file", file, "Array file (text or JSON)")->required();
  verify_cmd->add_option("--mode", mode, "classical | weak | relative-classical | relative-weak");
  verify_cmd->add_flag("--integer", integer, "Also require integer row and column sums");

  auto* strict_cmd = app.add_subcommand("strictness", "Decide whether a weak array is strictly weak");
  strict_cmd->add_option("file", file, "Array file")->required();

  SearchArgs s;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search for (weak) relative Heffter arrays");
  search_cmd->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  search_cmd->add_option("--m", s.m)->required();
  search_cmd->add_option("--n", s.n)->required();
  search_cmd->add_option("--h", s.h)->required();
  search_cmd->add_option("--k", s.k)->required();
  search_cmd->add_option("--t", s.t);
  search_cmd->add_option("--mode", s.mode, "classical | weak | strictly-weak");
  search_cmd->add_option("--goal", s.goal, "exists | count | enumerate");

  int cn = 0, ck = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Existence table over every admissible t");
  classify_cmd->add_option("--n", cn)->required();
  classify_cmd->add_option("--k", ck)->required();

  int sv = 0, st = 1, sk = 3;
  auto* systems_cmd = app.add_subcommand("systems", "List Heffter systems D_t(v;k)");
  systems_cmd->add_option("--v", sv)->required();
  systems_cmd->add_option("--t", st);
  systems_cmd->add_option("--k", sk);

  std::string family, stage = "final";
  int wn = 12;
  auto* construct_cmd = app.add_subcommand("construct", "Direct constructions");
  construct_cmd->add_option("family", family, "wh5")->required();
  construct_cmd->add_option("--n", wn);
  construct_cmd->add_option("--stage", stage, "base | lifted | blocks | final");

  std::string orient, solve;
  bool certify = false;
  auto* tour_cmd = app.add_subcommand("tour", "Crazy knight's tours over the two copies of an array");
  tour_cmd->add_option("file", file, "Array file")->required();
  auto* orient_opt = tour_cmd->add_option("--orient", orient, "C/R, e.g. -1,-1,1,1/1,1,1");
  tour_cmd->add_option("--solve", solve, "all | first")->excludes(orient_opt);
  tour_cmd->add_flag("--certify", certify, "Report a cell visited in both copies");

  std::string report_format;
  auto* embed_cmd = app.add_subcommand("embed", "Archdeacon embedding from line orientations");
  embed_cmd->add_option("file", file, "Array file")->required();
  embed_cmd->add_option("--orient", orient, "C/R")->required();
  embed_cmd->add_option("--report", report_format, "json | text")->check(CLI::IsMember({"json", "text"}));

  std::string target;
  auto* repro_cmd = app.add_subcommand("repro", "Re-run a reproduction and diff against its golden file");
  repro_cmd->add_option("target", target)->required()->check(CLI::IsMember(repro_targets()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return ExitCode::usage;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(g, file, mode, integer, out);
    if (strict_cmd->parsed()) return cmd_strictness(g, file, out, err);
    if (search_cmd->parsed()) return cmd_search(g, s, out);
    if (classify_cmd->parsed()) return cmd_classify(g, cn, ck, out);
    if (systems_cmd->parsed()) return cmd_systems(g, sv, st, sk, out);
    if (construct_cmd->parsed()) return cmd_construct(g, family, wn, stage, out);
    if (tour_cmd->parsed()) return cmd_tour(g, file, orient, solve.empty() ? "first" : solve, certify, out);
    if (embed_cmd->parsed()) return cmd_embed(g, file, orient, report_format, out);
    if (repro_cmd->parsed()) return cmd_repro(g, target, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded after " << e.nodes() << " nodes: " << e.what() << " (inconclusive)\n";
    return ExitCode::budget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  }
  return ExitCode::usage;
}

}  // namespace heffter::cli
