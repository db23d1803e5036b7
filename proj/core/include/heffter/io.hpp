#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "heffter/array.hpp"

namespace heffter::io {

/// Text form: header `v=<v> t=<t> m=<m> n=<n>`, then m lines of n `|`-separated cells.
/// Empty cell `.`; plain entry as a signed symmetric representative; split entry `+-x`
/// (row sign +) or `-+x` (row sign -). `±`/`∓` are accepted on input.
[[nodiscard]] WeakArray parse_text(std::string_view text);
[[nodiscard]] std::string format_text(const WeakArray& a);

/// JSON form: {"v","t","m","n","cells":[{"r","c","a","split"}]} with a the row-sign residue.
[[nodiscard]] WeakArray parse_json(std::string_view text);
[[nodiscard]] std::string format_json(const WeakArray& a, int indent = -1);

/// Dispatches on the first non-blank character (`{` means JSON).
[[nodiscard]] WeakArray parse_any(std::string_view text);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);
[[nodiscard]] WeakArray load(const std::filesystem::path& path);

/// One cell in text form, e.g. "-7", "+-10", "-+8", ".".
[[nodiscard]] std::string format_cell(const std::optional<SignedEntry>& e, int v);

}  // namespace heffter::io
