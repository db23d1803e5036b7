#include "heffter/verify.hpp"

#include <sstream>

namespace heffter {

std::string_view to_string(Mode mode) noexcept {
  switch (mode) {
    case Mode::classical: return "classical";
    case Mode::weak: return "weak";
    case Mode::relative_classical: return "relative-classical";
    case Mode::relative_weak: return "relative-weak";
  }
  return "?";
}

Mode parse_mode(std::string_view name) {
  if (name == "classical") return Mode::classical;
  if (name == "weak") return Mode::weak;
  if (name == "relative-classical") return Mode::relative_classical;
  if (name == "relative-weak") return Mode::relative_weak;
  throw Error("unknown mode '" + std::string(name) + "'");
}

std::string_view to_string(Condition c) noexcept {
  switch (c) {
    case Condition::shape: return "shape";
    case Condition::trivial_subgroup: return "trivial-subgroup";
    case Condition::line_counts: return "line-counts";
    case Condition::support: return "support";
    case Condition::zero_sums: return "zero-sums";
    case Condition::unsplit: return "unsplit";
    case Condition::integer_rows: return "integer-rows";
    case Condition::integer_columns: return "integer-columns";
  }
  return "?";
}

bool VerificationReport::passed(Condition c) const {
  for (const auto& r : conditions)
    if (r.condition == c) return r.ok;
  return true;
}

std::vector<Condition> VerificationReport::failures() const {
  std::vector<Condition> out;
  for (const auto& r : conditions)
    if (!r.ok) out.push_back(r.condition);
  return out;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  for (const auto& r : conditions) {
    os << (r.ok ? "PASS " : "FAIL ") << to_string(r.condition);
    if (!r.ok && !r.detail.empty()) os << ": " << r.detail;
    os << '\n';
  }
  os << (ok ? "VALID" : "INVALID") << '\n';
  return os.str();
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(bool fast) : fast_(fast) {}

  // Returns false when the caller should stop (fast mode and a failure recorded).
  bool add(Condition c, std::string failure) {
    const bool ok = failure.empty();
    report_.conditions.push_back({c, ok, std::move(failure)});
    report_.ok = report_.ok && ok;
    return ok || !fast_;
  }

  VerificationReport take() { return std::move(report_); }

 private:
  bool fast_;
  VerificationReport report_;
};

std::string row_label(int r) { return "row " + std::to_string(r); }
std::string col_label(int c) { return "column " + std::to_string(c); }

std::string check_line_counts(const WeakArray& a) {
  const auto& ctx = a.context();
  for (int r = 1; r <= ctx.m; ++r)
    if (static_cast<int>(a.filled_columns(r).size()) != ctx.h)
      return row_label(r) + " has " + std::to_string(a.filled_columns(r).size()) + " filled cells, expected " +
             std::to_string(ctx.h);
  for (int c = 1; c <= ctx.n; ++c)
    if (static_cast<int>(a.filled_rows(c).size()) != ctx.k)
      return col_label(c) + " has " + std::to_string(a.filled_rows(c).size()) + " filled cells, expected " +
             std::to_string(ctx.k);
  return {};
}

std::string check_support(const WeakArray& a) {
  const int v = a.modulus();
  std::vector<int> seen(static_cast<std::size_t>(v / 2 + 1), 0);
  for (const Cell cell : a.skeleton()) {
    const int rep = canonical_class(a.at(cell)->a, v).rep;
    if (++seen[static_cast<std::size_t>(rep)] > 1)
      return "class " + std::to_string(rep) + " repeated at (" + std::to_string(cell.r) + "," +
             std::to_string(cell.c) + ")";
  }
  for (const int rep : a.context().subgroup().classes())
    if (seen[static_cast<std::size_t>(rep)] == 0) return "class " + std::to_string(rep) + " missing";
  return {};
}

std::string check_zero_sums(const WeakArray& a) {
  const auto& ctx = a.context();
  for (int r = 1; r <= ctx.m; ++r) {
    std::int64_t sum = 0;
    for (int c : a.filled_columns(r)) sum += a.at(r, c)->row_value();
    if (mod(sum, ctx.v) != 0) return row_label(r) + " sums to " + std::to_string(mod(sum, ctx.v));
  }
  for (int c = 1; c <= ctx.n; ++c) {
    std::int64_t sum = 0;
    for (int r : a.filled_rows(c)) sum += a.at(r, c)->column_value(ctx.v);
    if (mod(sum, ctx.v) != 0) return col_label(c) + " sums to " + std::to_string(mod(sum, ctx.v));
  }
  return {};
}

std::string check_unsplit(const WeakArray& a) {
  for (const Cell cell : a.skeleton())
    if (a.at(cell)->split)
      return "split entry at (" + std::to_string(cell.r) + "," + std::to_string(cell.c) + ")";
  return {};
}

}  // namespace

VerificationReport verify(const WeakArray& a, Mode mode, bool fast) {
  ReportBuilder report(fast);
  const auto& ctx = a.context();
  if (!report.add(Condition::shape, ctx.heffter_shaped() ? std::string{} : "v=" + std::to_string(ctx.v) +
                                                                                " is not 2nk+t for this fill pattern"))
    return report.take();
  const bool relative = mode == Mode::relative_classical || mode == Mode::relative_weak;
  if (!relative && !report.add(Condition::trivial_subgroup,
                               ctx.t == 1 ? std::string{} : "t=" + std::to_string(ctx.t) + " in a non-relative mode"))
    return report.take();
  if (!report.add(Condition::line_counts, check_line_counts(a))) return report.take();
  if (!report.add(Condition::support, check_support(a))) return report.take();
  if (!report.add(Condition::zero_sums, check_zero_sums(a))) return report.take();
  if (is_classical(mode)) report.add(Condition::unsplit, check_unsplit(a));
  return report.take();
}

VerificationReport verify_integer(const WeakArray& a) {
  ReportBuilder report(false);
  const auto& ctx = a.context();
  std::string row_failure;
  for (int r = 1; r <= ctx.m && row_failure.empty(); ++r) {
    std::int64_t sum = 0;
    for (int c : a.filled_columns(r)) sum += symmetric(a.at(r, c)->row_value(), ctx.v);
    if (sum != 0) row_failure = row_label(r) + " sums to " + std::to_string(sum) + " in Z";
  }
  report.add(Condition::integer_rows, row_failure);
  std::string col_failure;
  for (int c = 1; c <= ctx.n && col_failure.empty(); ++c) {
    std::int64_t sum = 0;
    for (int r : a.filled_rows(c)) sum += symmetric(a.at(r, c)->column_value(ctx.v), ctx.v);
    if (sum != 0) col_failure = col_label(c) + " sums to " + std::to_string(sum) + " in Z";
  }
  report.add(Condition::integer_columns, col_failure);
  return report.take();
}

std::pair<std::vector<Cell>, std::vector<Cell>> theta_omega(const WeakArray& a) {
  std::pair<std::vector<Cell>, std::vector<Cell>> out;
  for (const Cell cell : a.skeleton()) (a.at(cell)->split ? out.second : out.first).push_back(cell);
  return out;
}

std::vector<int> lambda_table(const WeakArray& a) {
  const int v = a.modulus();
  std::vector<int> table(static_cast<std::size_t>(v), 0);
  for (const Cell cell : a.skeleton()) {
    const auto& e = *a.at(cell);
    const int sign = e.split ? -1 : 1;
    table[static_cast<std::size_t>(e.a)] = sign;
    table[static_cast<std::size_t>(neg_mod(e.a, v))] = sign;
  }
  return table;
}

int lambda(const WeakArray& a, int residue) {
  const int v = a.modulus();
  const int r = mod(residue, v);
  if (r == 0 || a.context().subgroup().contains(r)) throw Error("lambda is undefined on J");
  for (const Cell cell : a.skeleton()) {
    const auto& e = *a.at(cell);
    if (e.a == r || neg_mod(e.a, v) == r) return e.split ? -1 : 1;
  }
  throw Error("class of " + std::to_string(symmetric(r, v)) + " does not occur in the array");
}

}  // namespace heffter
