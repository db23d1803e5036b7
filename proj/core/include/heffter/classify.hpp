#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/search.hpp"

namespace heffter {

/// One existence question answered by a completed search: a witness, or the node count of the
/// exhaustive run that found none.
struct ExistenceAnswer {
  bool exists = false;
  std::uint64_t nodes = 0;
  std::optional<WeakArray> witness;
};

struct ClassificationRow {
  int t = 0;
  int v = 0;
  NecessaryVerdict necessary;
  std::size_t systems = 0;  ///< Heffter systems D_t(v;k)
  ExistenceAnswer weak;
  ExistenceAnswer classical;
  ExistenceAnswer strictly_weak;
};

struct Classification {
  int n = 0;
  int k = 0;
  std::vector<ClassificationRow> rows;  ///< one per divisor t of 2nk, increasing

  [[nodiscard]] std::string to_json(int indent = -1) const;
  [[nodiscard]] std::string to_text() const;
};

/// Square n x n arrays with k filled cells per line, for every divisor t of 2nk.
/// Throws BudgetExceeded if any of the searches runs out of budget.
[[nodiscard]] Classification classify(int n, int k, const EnumerationOptions& options = {});

}  // namespace heffter
