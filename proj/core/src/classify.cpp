#include "heffter/classify.hpp"

#include <sstream>

#include <json.hpp>

#include "heffter/io.hpp"
#include "heffter/systems.hpp"

namespace heffter {

namespace {

ExistenceAnswer answer(const ArrayContext& ctx, SearchMode mode, const EnumerationOptions& options) {
  SearchSpec spec{ctx, mode, SearchGoal::exists, options};
  auto result = search_arrays(spec);
  return {result.found, result.nodes, std::move(result.witness)};
}

nlohmann::ordered_json to_json(const ExistenceAnswer& a) {
  nlohmann::ordered_json j;
  j["exists"] = a.exists;
  j["nodes"] = a.nodes;
  if (a.witness) j["witness"] = io::format_text(*a.witness);
  return j;
}

std::string yes_no(const ExistenceAnswer& a) { return a.exists ? "yes" : "no"; }

}  // namespace

Classification classify(int n, int k, const EnumerationOptions& options) {
  if (n < 3 || k < 3 || k > n) throw Error("classification needs 3 <= k <= n");
  Classification out{n, k, {}};
  const int two_nk = 2 * n * k;
  for (int t = 1; t <= two_nk; ++t) {
    if (two_nk % t != 0) continue;
    const auto ctx = ArrayContext::heffter(n, n, k, k, t);
    ClassificationRow row;
    row.t = t;
    row.v = ctx.v;
    row.necessary = necessary_conditions(n, k, t);
    row.systems = enumerate_heffter_systems(ctx.v, t, k, options).size();
    row.weak = answer(ctx, SearchMode::weak, options);
    row.classical = answer(ctx, SearchMode::classical, options);
    row.strictly_weak = answer(ctx, SearchMode::strictly_weak, options);
    out.rows.push_back(std::move(row));
  }
  return out;
}

std::string Classification::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["t"] = r.t;
    row["v"] = r.v;
    row["necessary"] = {{"pass", r.necessary.pass},
                        {"clause", r.necessary.clause},
                        {"integer_only", r.necessary.integer_only},
                        {"reason", r.necessary.reason}};
    row["systems"] = r.systems;
    row["weak"] = heffter::to_json(r.weak);
    row["classical"] = heffter::to_json(r.classical);
    row["strictly_weak"] = heffter::to_json(r.strictly_weak);
    arr.push_back(std::move(row));
  }
  j["rows"] = std::move(arr);
  return j.dump(indent);
}

std::string Classification::to_text() const {
  std::ostringstream os;
  os << "n=" << n << " k=" << k << "\n";
  os << "t\tv\tparity\tsystems\tweak\tclassical\tstrictly-weak\n";
  for (const auto& r : rows) {
    os << r.t << '\t' << r.v << '\t'
       << (r.necessary.pass ? std::string("ok") : "fails " + std::to_string(r.necessary.clause)) << '\t' << r.systems
       << '\t' << yes_no(r.weak) << '\t' << yes_no(r.classical) << '\t' << yes_no(r.strictly_weak) << '\n';
  }
  return os.str();
}

}  // namespace heffter
