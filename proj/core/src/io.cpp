#include "heffter/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace heffter::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

long long parse_integer(std::string_view s, std::string_view what) {
  long long value = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc{} || ptr != end)
    throw Error("malformed " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

int header_field(std::string_view token, std::string_view key) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=')
    throw Error("expected '" + std::string(key) + "=' in header, got '" + std::string(token) + "'");
  return static_cast<int>(parse_integer(token.substr(key.size() + 1), "header value"));
}

std::optional<SignedEntry> parse_cell(std::string_view raw, int v) {
  const std::string_view s = trim(raw);
  if (s == ".") return std::nullopt;
  static constexpr std::string_view plus_minus_utf8 = "\xC2\xB1";   // ±
  static constexpr std::string_view minus_plus_utf8 = "\xE2\x88\x93";  // ∓
  auto split_entry = [&](std::string_view magnitude, int row_sign) {
    const long long x = parse_integer(magnitude, "cell");
    if (x <= 0) throw Error("split entry magnitude must be positive: '" + std::string(s) + "'");
    return SignedEntry{mod(row_sign * x, v), true};
  };
  if (s.starts_with("+-")) return split_entry(s.substr(2), 1);
  if (s.starts_with("-+")) return split_entry(s.substr(2), -1);
  if (s.starts_with(plus_minus_utf8)) return split_entry(s.substr(plus_minus_utf8.size()), 1);
  if (s.starts_with(minus_plus_utf8)) return split_entry(s.substr(minus_plus_utf8.size()), -1);
  return SignedEntry{mod(parse_integer(s, "cell"), v), false};
}

WeakArray finish(WeakArray a) {
  a.infer_shape();
  return a;
}

}  // namespace

WeakArray parse_text(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto line : split(text, '\n')) {
    line = trim(line);
    if (!line.empty() && line.front() != '#') lines.push_back(line);
  }
  if (lines.empty()) throw Error("empty array text");
  std::vector<std::string_view> header;
  for (auto tok : split(lines.front(), ' '))
    if (!trim(tok).empty()) header.push_back(trim(tok));
  if (header.size() != 4) throw Error("header must read 'v=<v> t=<t> m=<m> n=<n>'");
  const int v = header_field(header[0], "v");
  const int t = header_field(header[1], "t");
  const int m = header_field(header[2], "m");
  const int n = header_field(header[3], "n");
  if (static_cast<int>(lines.size()) != m + 1)
    throw Error("expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1));
  WeakArray a(ArrayContext::grid(m, n, v, t));
  for (int r = 1; r <= m; ++r) {
    const auto cells = split(lines[static_cast<std::size_t>(r)], '|');
    if (static_cast<int>(cells.size()) != n)
      throw Error("row " + std::to_string(r) + " has " + std::to_string(cells.size()) + " cells, expected " +
                  std::to_string(n));
    for (int c = 1; c <= n; ++c)
      if (auto e = parse_cell(cells[static_cast<std::size_t>(c - 1)], v)) a.set(r, c, *e);
  }
  return finish(std::move(a));
}

std::string format_cell(const std::optional<SignedEntry>& e, int v) {
  if (!e) return ".";
  const int s = symmetric(e->a, v);
  if (!e->split) return std::to_string(s);
  return (s > 0 ? "+-" : "-+") + std::to_string(s > 0 ? s : -s);
}

std::string format_text(const WeakArray& a) {
  const auto& ctx = a.context();
  std::string out = "v=" + std::to_string(ctx.v) + " t=" + std::to_string(ctx.t) + " m=" + std::to_string(ctx.m) +
                    " n=" + std::to_string(ctx.n) + "\n";
  for (int r = 1; r <= ctx.m; ++r) {
    for (int c = 1; c <= ctx.n; ++c) {
      if (c > 1) out += '|';
      out += format_cell(a.at(r, c), ctx.v);
    }
    out += '\n';
  }
  return out;
}

WeakArray parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed array JSON: ") + ex.what());
  }
  try {
    WeakArray a(ArrayContext::grid(j.at("m").get<int>(), j.at("n").get<int>(), j.at("v").get<int>(),
                                   j.at("t").get<int>()));
    for (const auto& cell : j.at("cells")) {
      const int r = cell.at("r").get<int>();
      const int c = cell.at("c").get<int>();
      const int value = cell.at("a").get<int>();
      if (value < 1 || value >= a.modulus()) throw Error("cell residue out of range [1, v-1]");
      if (a.filled(r, c)) throw Error("cell (" + std::to_string(r) + "," + std::to_string(c) + ") listed twice");
      a.set(r, c, SignedEntry{value, cell.value("split", false)});
    }
    return finish(std::move(a));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed array JSON: ") + ex.what());
  }
}

std::string format_json(const WeakArray& a, int indent) {
  const auto& ctx = a.context();
  nlohmann::json j{{"v", ctx.v}, {"t", ctx.t}, {"m", ctx.m}, {"n", ctx.n}};
  auto cells = nlohmann::json::array();
  for (const Cell cell : a.skeleton()) {
    const auto& e = *a.at(cell);
    cells.push_back({{"r", cell.r}, {"c", cell.c}, {"a", e.a}, {"split", e.split}});
  }
  j["cells"] = std::move(cells);
  return j.dump(indent) + "\n";
}

WeakArray parse_any(std::string_view text) {
  for (const char ch : text) {
    if (ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t') continue;
    return ch == '{' ? parse_json(text) : parse_text(text);
  }
  throw Error("empty input");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

WeakArray load(const std::filesystem::path& path) { return parse_any(read_file(path)); }

}  // namespace heffter::io
