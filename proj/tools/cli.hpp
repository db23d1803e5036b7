#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "heffter/systems.hpp"

namespace heffter::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, budget = 3 };

/// Runs one `heffter` invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default location of fixtures and golden files, overridable with --data-dir or HEFFTER_DATA_DIR.
std::filesystem::path default_data_dir();

/// Reproduction targets, in documented order.
const std::vector<std::string>& repro_targets();

/// Runs a reproduction target and returns its report; `golden` receives the expected text.
std::string run_repro(const std::string& target, const std::filesystem::path& data_dir, std::string& golden,
                      const EnumerationOptions& options = {});

}  // namespace heffter::cli
