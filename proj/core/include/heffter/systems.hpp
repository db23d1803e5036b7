#pragma once

#include <bitset>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "heffter/budget.hpp"

namespace heffter {

/// Up to this many pair classes fit in a ClassMask.
inline constexpr int max_classes = 128;
using ClassMask = std::bitset<max_classes>;

/// A set of pair classes that admits at least one zero-sum signing.
/// `signings` holds every zero-sum sign vector whose first (smallest-class) sign is +1;
/// the negated vectors are the remaining zero-sum signings.
struct SignableBlock {
  std::vector<int> classes;  ///< canonical representatives, ascending
  std::vector<std::vector<int>> signings;
  ClassMask mask;            ///< over class indices (positions in ClassTable::classes)
};

/// All signable k-subsets of (Z_v \ J)/+-.
class BlockTable {
 public:
  BlockTable(int v, int t, int block_size);

  [[nodiscard]] int modulus() const noexcept { return v_; }
  [[nodiscard]] int subgroup_order() const noexcept { return t_; }
  [[nodiscard]] int block_size() const noexcept { return size_; }
  [[nodiscard]] const std::vector<int>& classes() const noexcept { return classes_; }
  [[nodiscard]] int class_index(int rep) const { return index_of_[static_cast<std::size_t>(rep)]; }
  [[nodiscard]] const std::vector<SignableBlock>& blocks() const noexcept { return blocks_; }
  /// Blocks whose smallest class has the given index.
  [[nodiscard]] const std::vector<int>& blocks_starting_at(int class_index) const {
    return by_min_[static_cast<std::size_t>(class_index)];
  }

 private:
  int v_, t_, size_;
  std::vector<int> classes_;
  std::vector<int> index_of_;
  std::vector<SignableBlock> blocks_;
  std::vector<std::vector<int>> by_min_;
};

struct EnumerationOptions {
  unsigned threads = 1;
  bool reverse_order = false;   ///< explore candidate blocks in reverse order
  std::uint64_t node_budget = 0;
  double time_budget_seconds = 0;
};

/// A partition of the classes into signable blocks (block ids into a BlockTable), sorted by smallest class.
using ClassPartition = std::vector<int>;

struct PartitionEnumeration {
  std::vector<ClassPartition> partitions;  ///< in canonical (forward) order regardless of options
  std::uint64_t nodes = 0;
};

/// Every partition of the classes into blocks of the table. Deterministic output order.
[[nodiscard]] PartitionEnumeration enumerate_partitions(const BlockTable& table, const EnumerationOptions& options = {});

/// Depth-first partitions in forward order, streamed; stop by returning false.
void for_each_partition(const BlockTable& table, Budget& budget, const std::function<bool(const ClassPartition&)>& sink);

/// Heffter system D_t(v;k): blocks of signed symmetric representatives.
/// Canonical form: each block has its smallest class positive and lists elements by class;
/// blocks are sorted.
struct HeffterSystem {
  int v = 0;
  int t = 1;
  std::vector<std::vector<int>> blocks;

  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const HeffterSystem&, const HeffterSystem&) = default;
  friend auto operator<=>(const HeffterSystem& a, const HeffterSystem& b) { return a.blocks <=> b.blocks; }
};

/// All Heffter systems D_t(v;k) up to negation of whole blocks, sorted.
/// Requires t | v and k | (v - t)/2; throws Error otherwise.
[[nodiscard]] std::vector<HeffterSystem> enumerate_heffter_systems(int v, int t, int k,
                                                                   const EnumerationOptions& options = {});

/// Signed blocks of a system assembled from a partition, using signing `choice[i]` for block i.
[[nodiscard]] HeffterSystem make_system(const BlockTable& table, const ClassPartition& partition,
                                        const std::vector<int>& choice);

/// Canonical form of arbitrary signed blocks (residues or symmetric values); does not validate.
[[nodiscard]] HeffterSystem canonical_system(int v, int t, const std::vector<std::vector<int>>& blocks);

/// Parses "{1,2,-3} {4,8,9} ..." (whitespace and commas between blocks are ignored).
[[nodiscard]] std::vector<std::vector<int>> parse_blocks(std::string_view text);

/// True when `blocks` (signed residues or symmetric values) form a D_t(v;k).
[[nodiscard]] bool is_heffter_system(int v, int t, const std::vector<std::vector<int>>& blocks);

}  // namespace heffter
