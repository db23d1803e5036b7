#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace heffter {

/// Thrown when a search runs out of its node or wall-clock allowance. Never means "no solution".
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes) : std::runtime_error(what), nodes_(nodes) {}
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

/// Shared node counter with optional node and wall-clock limits (0 = unlimited).
class Budget {
 public:
  Budget() = default;
  Budget(std::uint64_t max_nodes, double max_seconds)
      : max_nodes_(max_nodes), max_seconds_(max_seconds), start_(std::chrono::steady_clock::now()) {}

  /// Counts one node; throws BudgetExceeded when a limit is hit.
  void tick() {
    const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes_ != 0 && n > max_nodes_) throw BudgetExceeded("node budget exceeded", n);
    if (max_seconds_ > 0 && (n & 0xFFF) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > max_seconds_) throw BudgetExceeded("time budget exceeded", n);
    }
  }

  /// Counts `count` nodes at once (work done by a nested search with its own counter).
  void add(std::uint64_t count) {
    const auto n = nodes_.fetch_add(count, std::memory_order_relaxed) + count;
    if (max_nodes_ != 0 && n > max_nodes_) throw BudgetExceeded("node budget exceeded", n);
  }

  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> nodes_{0};
  std::uint64_t max_nodes_ = 0;
  double max_seconds_ = 0;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace heffter
