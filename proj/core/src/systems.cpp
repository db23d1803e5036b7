#include "heffter/systems.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <map>
#include <set>

#include "heffter/array.hpp"
#include "heffter/modular.hpp"

namespace heffter {

BlockTable::BlockTable(int v, int t, int block_size) : v_(v), t_(t), size_(block_size) {
  if (block_size < 1) throw Error("block size must be positive");
  if ((v - t) % 2 != 0) throw Error("v - t must be even (v/2 would be a class of its own)");
  const Subgroup group(v, t);
  classes_ = group.classes();
  if (static_cast<int>(classes_.size()) > max_classes)
    throw Error("too many classes (" + std::to_string(classes_.size()) + ") for block enumeration");
  index_of_.assign(static_cast<std::size_t>(v / 2 + 1), -1);
  for (std::size_t i = 0; i < classes_.size(); ++i) index_of_[static_cast<std::size_t>(classes_[i])] = static_cast<int>(i);

  std::map<std::vector<int>, std::vector<std::vector<int>>> found;
  const int count = static_cast<int>(classes_.size());
  std::vector<int> picked;
  std::vector<int> signs;
  // Choose the first block_size - 1 classes (smallest first, its sign fixed to +1); the last is forced.
  auto recurse = [&](auto&& self, int from, std::int64_t sum) -> void {
    if (static_cast<int>(picked.size()) == block_size - 1) {
      const int x = mod(-sum, v);
      if (x == 0 || group.contains(x)) return;
      const int rep = canonical_class(x, v).rep;
      const int idx = index_of_[static_cast<std::size_t>(rep)];
      if (idx < 0 || (!picked.empty() && idx <= picked.back())) return;
      std::vector<int> cls, sg = signs;
      for (int p : picked) cls.push_back(classes_[static_cast<std::size_t>(p)]);
      cls.push_back(rep);
      sg.push_back(x == rep ? 1 : -1);
      if (block_size == 1) return;  // a single nonzero element never sums to zero
      found[cls].push_back(std::move(sg));
      return;
    }
    for (int i = from; i < count; ++i) {
      const int c = classes_[static_cast<std::size_t>(i)];
      for (int s : {1, -1}) {
        if (picked.empty() && s < 0) continue;
        picked.push_back(i);
        signs.push_back(s);
        self(self, i + 1, sum + static_cast<std::int64_t>(s) * c);
        picked.pop_back();
        signs.pop_back();
      }
    }
  };
  recurse(recurse, 0, 0);

  by_min_.assign(classes_.size(), {});
  for (auto& [cls, sgs] : found) {
    SignableBlock block;
    block.classes = cls;
    std::sort(sgs.begin(), sgs.end(), std::greater<>());
    block.signings = std::move(sgs);
    for (int c : cls) block.mask.set(static_cast<std::size_t>(index_of_[static_cast<std::size_t>(c)]));
    by_min_[static_cast<std::size_t>(index_of_[static_cast<std::size_t>(cls.front())])].push_back(
        static_cast<int>(blocks_.size()));
    blocks_.push_back(std::move(block));
  }
}

namespace {

int first_uncovered(const ClassMask& covered, int count) {
  for (int i = 0; i < count; ++i)
    if (!covered.test(static_cast<std::size_t>(i))) return i;
  return count;
}

// Returns false when the sink asked to stop.
bool cover(const BlockTable& table, ClassMask& covered, ClassPartition& stack, Budget& budget, bool reverse,
           const std::function<bool(const ClassPartition&)>& sink) {
  budget.tick();
  const int count = static_cast<int>(table.classes().size());
  const int next = first_uncovered(covered, count);
  if (next == count) return sink(stack);
  const auto& candidates = table.blocks_starting_at(next);
  const std::size_t len = candidates.size();
  for (std::size_t step = 0; step < len; ++step) {
    const int id = candidates[reverse ? len - 1 - step : step];
    const auto& mask = table.blocks()[static_cast<std::size_t>(id)].mask;
    if ((covered & mask).any()) continue;
    covered |= mask;
    stack.push_back(id);
    const bool go_on = cover(table, covered, stack, budget, reverse, sink);
    stack.pop_back();
    covered &= ~mask;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_partition(const BlockTable& table, Budget& budget, const std::function<bool(const ClassPartition&)>& sink) {
  ClassMask covered;
  ClassPartition stack;
  cover(table, covered, stack, budget, false, sink);
}

PartitionEnumeration enumerate_partitions(const BlockTable& table, const EnumerationOptions& options) {
  Budget budget(options.node_budget, options.time_budget_seconds);
  PartitionEnumeration result;
  if (table.classes().empty()) {
    result.partitions.push_back({});
    return result;
  }
  budget.tick();  // root
  const auto& first = table.blocks_starting_at(0);
  std::vector<std::vector<ClassPartition>> per_branch(first.size());

  auto explore = [&](std::size_t branch) {
    const int id = first[branch];
    ClassMask covered = table.blocks()[static_cast<std::size_t>(id)].mask;
    ClassPartition stack{id};
    cover(table, covered, stack, budget, options.reverse_order, [&](const ClassPartition& p) {
      per_branch[branch].push_back(p);
      return true;
    });
  };

  std::vector<std::size_t> order(first.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = options.reverse_order ? order.size() - 1 - i : i;
  if (options.threads <= 1) {
    for (std::size_t b : order) explore(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < options.threads; ++w)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < order.size(); i = next++) explore(order[i]);
      }));
    for (auto& f : workers) f.get();
  }
  for (auto& branch : per_branch)
    for (auto& p : branch) result.partitions.push_back(std::move(p));
  std::sort(result.partitions.begin(), result.partitions.end());
  result.nodes = budget.nodes();
  return result;
}

HeffterSystem make_system(const BlockTable& table, const ClassPartition& partition, const std::vector<int>& choice) {
  HeffterSystem system{table.modulus(), table.subgroup_order(), {}};
  for (std::size_t i = 0; i < partition.size(); ++i) {
    const auto& block = table.blocks()[static_cast<std::size_t>(partition[i])];
    const auto& signs = block.signings[static_cast<std::size_t>(choice[i])];
    std::vector<int> values;
    for (std::size_t j = 0; j < block.classes.size(); ++j) values.push_back(signs[j] * block.classes[j]);
    system.blocks.push_back(std::move(values));
  }
  std::sort(system.blocks.begin(), system.blocks.end(), [](const auto& x, const auto& y) {
    return std::abs(x.front()) < std::abs(y.front());
  });
  return system;
}

std::vector<HeffterSystem> enumerate_heffter_systems(int v, int t, int k, const EnumerationOptions& options) {
  if (t < 1 || v < 2 || v % t != 0) throw Error("t must divide v");
  if ((v - t) % 2 != 0 || ((v - t) / 2) % k != 0)
    throw Error("inadmissible parameters: k=" + std::to_string(k) + " must divide (v-t)/2");
  const BlockTable table(v, t, k);
  const auto enumeration = enumerate_partitions(table, options);
  std::set<HeffterSystem> systems;
  for (const auto& partition : enumeration.partitions) {
    std::vector<int> choice(partition.size(), 0);
    while (true) {
      systems.insert(make_system(table, partition, choice));
      std::size_t i = 0;
      for (; i < choice.size(); ++i) {
        const auto limit = table.blocks()[static_cast<std::size_t>(partition[i])].signings.size();
        if (++choice[i] < static_cast<int>(limit)) break;
        choice[i] = 0;
      }
      if (i == choice.size()) break;
    }
  }
  return {systems.begin(), systems.end()};
}

bool is_heffter_system(int v, int t, const std::vector<std::vector<int>>& blocks) {
  const Subgroup group(v, t);
  std::set<int> seen;
  for (const auto& block : blocks) {
    std::int64_t sum = 0;
    for (int x : block) {
      const int r = mod(x, v);
      if (r == 0 || group.contains(r)) return false;
      if (!seen.insert(canonical_class(r, v).rep).second) return false;
      sum += r;
    }
    if (mod(sum, v) != 0) return false;
  }
  return static_cast<int>(seen.size()) == (v - t) / 2;
}

HeffterSystem canonical_system(int v, int t, const std::vector<std::vector<int>>& blocks) {
  HeffterSystem system{v, t, {}};
  for (const auto& block : blocks) {
    std::vector<int> values;
    for (int x : block) values.push_back(symmetric(mod(x, v), v));
    std::sort(values.begin(), values.end(), [](int x, int y) { return std::abs(x) < std::abs(y); });
    if (!values.empty() && values.front() < 0)
      for (int& x : values) x = -x;
    system.blocks.push_back(std::move(values));
  }
  std::sort(system.blocks.begin(), system.blocks.end(), [](const auto& x, const auto& y) {
    return std::abs(x.front()) < std::abs(y.front());
  });
  return system;
}

std::vector<std::vector<int>> parse_blocks(std::string_view text) {
  std::vector<std::vector<int>> blocks;
  std::size_t pos = 0;
  while ((pos = text.find('{', pos)) != std::string_view::npos) {
    const auto close = text.find('}', pos);
    if (close == std::string_view::npos) throw Error("unterminated block in '" + std::string(text) + "'");
    std::vector<int> block;
    auto body = text.substr(pos + 1, close - pos - 1);
    while (!body.empty()) {
      const auto comma = body.find(',');
      auto item = body.substr(0, comma);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      if (!item.empty() && item.front() == '+') item.remove_prefix(1);
      int x = 0;
      const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
      if (ec != std::errc{} || p != item.data() + item.size()) throw Error("bad block element '" + std::string(item) + "'");
      block.push_back(x);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    blocks.push_back(std::move(block));
    pos = close + 1;
  }
  return blocks;
}

std::string HeffterSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += ' ';
    out += '{';
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(blocks[i][j]);
    }
    out += '}';
  }
  return out;
}

}  // namespace heffter
