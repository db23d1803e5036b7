#include <doctest.h>

#include "heffter/systems.hpp"
#include "support.hpp"

using namespace heffter;

namespace {

std::set<HeffterSystem> reference(const std::string& file) {
  std::istringstream in(io::read_file(test::fixture_path(file)));
  std::string header;
  std::getline(in, header);
  int v = 0, t = 0, k = 0;
  REQUIRE(std::sscanf(header.c_str(), "v=%d t=%d k=%d", &v, &t, &k) == 3);
  std::set<HeffterSystem> out;
  for (std::string line; std::getline(in, line);) {
    const auto blocks = parse_blocks(line);
    CHECK(is_heffter_system(v, t, blocks));
    out.insert(canonical_system(v, t, blocks));
  }
  return out;
}

std::set<HeffterSystem> enumerated(int v, int t, int k) {
  const auto all = enumerate_heffter_systems(v, t, k);
  return {all.begin(), all.end()};
}

}  // namespace

TEST_CASE("block table") {
  const BlockTable table(21, 3, 3);
  CHECK(table.classes() == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 9, 10});
  for (const auto& b : table.blocks()) {
    REQUIRE(b.classes.size() == 3);
    for (const auto& s : b.signings) {
      CHECK(s.front() == 1);
      long long sum = 0;
      for (std::size_t i = 0; i < 3; ++i) sum += s[i] * b.classes[i];
      CHECK(mod(sum, 21) == 0);
    }
  }
}

TEST_CASE("reference systems are found exactly") {
  const auto d3 = reference("d3_21_3.txt");
  CHECK(d3.size() == 4);
  CHECK(enumerated(21, 3, 3) == d3);
  const auto d8 = reference("d8_32_3.txt");
  CHECK(d8.size() == 1);
  CHECK(enumerated(32, 8, 3) == d8);
}

TEST_CASE("system counts") {
  CHECK(enumerate_heffter_systems(27, 3, 3).size() == 9);
  CHECK(enumerate_heffter_systems(30, 6, 3).size() == 10);
  CHECK(enumerate_heffter_systems(27, 9, 3).empty());
  CHECK(enumerate_heffter_systems(36, 12, 3).empty());
}

TEST_CASE("system counts agree with a brute-force partition count") {
  struct Case { int v, t, k; };
  for (const Case& c : {Case{19, 1, 3}, Case{21, 3, 3}, Case{24, 6, 3}, Case{25, 1, 3}, Case{26, 2, 3}, Case{27, 3, 3},
                        Case{28, 4, 3}, Case{30, 6, 3}, Case{32, 8, 3}, Case{27, 9, 3}, Case{36, 12, 3}, Case{25, 1, 4}}) {
    CAPTURE(c.v);
    CAPTURE(c.t);
    CHECK(static_cast<long long>(enumerate_heffter_systems(c.v, c.t, c.k).size()) == test::oracle_system_count(c.v, c.t, c.k));
  }
}

TEST_CASE("enumerated systems are canonical and valid") {
  for (const auto& s : enumerate_heffter_systems(30, 6, 3)) {
    CHECK(is_heffter_system(30, 6, s.blocks));
    CHECK(canonical_system(30, 6, s.blocks) == s);
    for (const auto& b : s.blocks) CHECK(b.front() > 0);
  }
}

TEST_CASE("enumeration is order and thread independent") {
  const BlockTable table(27, 3, 3);
  EnumerationOptions reversed;
  reversed.reverse_order = true;
  EnumerationOptions threaded;
  threaded.threads = 4;
  const auto base = enumerate_partitions(table);
  CHECK(enumerate_partitions(table, reversed).partitions == base.partitions);
  CHECK(enumerate_partitions(table, threaded).partitions == base.partitions);
  CHECK(enumerate_heffter_systems(27, 3, 3, threaded) == enumerate_heffter_systems(27, 3, 3));
}

TEST_CASE("block parsing and validation") {
  CHECK(parse_blocks("{1,2,-3} {4,8,9}") == std::vector<std::vector<int>>{{1, 2, -3}, {4, 8, 9}});
  CHECK_THROWS_AS((void)parse_blocks("{1,2"), Error);
  CHECK_THROWS_AS((void)parse_blocks("{1,x}"), Error);
  CHECK_FALSE(is_heffter_system(21, 3, {{1, 2, -3}}));
  CHECK_THROWS_AS((void)enumerate_heffter_systems(22, 3, 3), Error);
  CHECK_THROWS_AS((void)enumerate_heffter_systems(23, 1, 3), Error);
  CHECK(canonical_system(21, 3, {{-4, 5, -1}}).blocks == std::vector<std::vector<int>>{{1, 4, -5}});
}
