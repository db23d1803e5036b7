#include <doctest.h>

#include <json.hpp>

#include "heffter/classify.hpp"
#include "support.hpp"

using namespace heffter;

namespace {

std::vector<int> ts(const Classification& c, const ExistenceAnswer ClassificationRow::*field) {
  std::vector<int> out;
  for (const auto& r : c.rows)
    if ((r.*field).exists) out.push_back(r.t);
  return out;
}

}  // namespace

TEST_CASE("classification of (3;3)") {
  const auto c = classify(3, 3);
  std::vector<int> all;
  for (const auto& r : c.rows) all.push_back(r.t);
  CHECK(all == std::vector<int>{1, 2, 3, 6, 9, 18});
  CHECK(ts(c, &ClassificationRow::classical) == std::vector<int>{1, 3, 6});
  CHECK(ts(c, &ClassificationRow::strictly_weak) == std::vector<int>{6});
  CHECK(ts(c, &ClassificationRow::weak) == std::vector<int>{1, 3, 6});
  std::vector<std::size_t> systems;
  for (const auto& r : c.rows) systems.push_back(r.systems);
  CHECK(systems == std::vector<std::size_t>{4, 0, 4, 5, 0, 0});
  for (const auto& r : c.rows) {
    CAPTURE(r.t);
    if (r.classical.exists) {
      REQUIRE(r.classical.witness);
      CHECK(verify(*r.classical.witness, Mode::relative_classical).ok);
    }
    if (r.strictly_weak.exists) {
      REQUIRE(r.strictly_weak.witness);
      CHECK_FALSE(test::oracle_has_classical_signing(*r.strictly_weak.witness));
    }
    // a weak array over Z_v needs a system of rows
    if (r.weak.exists) CHECK(r.systems > 0);
  }
}

TEST_CASE("classification of (4;3)") {
  const auto c = classify(4, 3);
  CHECK(ts(c, &ClassificationRow::classical) == std::vector<int>{1, 2, 3, 4, 6});
  CHECK(ts(c, &ClassificationRow::strictly_weak) == std::vector<int>{2, 4});
  std::vector<std::size_t> systems;
  for (const auto& r : c.rows) systems.push_back(r.systems);
  CHECK(systems == std::vector<std::size_t>{15, 24, 9, 14, 10, 1, 0, 0});
  CHECK_FALSE(c.rows.back().necessary.pass);
  CHECK(c.rows.back().necessary.clause == 2);
}

TEST_CASE("classification output") {
  const auto c = classify(3, 3);
  const auto j = nlohmann::json::parse(c.to_json());
  CHECK(j["n"] == 3);
  CHECK(j["rows"].size() == 6);
  CHECK(j["rows"][3]["t"] == 6);
  CHECK(j["rows"][3]["strictly_weak"]["exists"] == true);
  CHECK(io::parse_text(j["rows"][3]["strictly_weak"]["witness"].get<std::string>()).context().t == 6);
  const auto text = c.to_text();
  CHECK(text.find("6\t24\tok\t5\tyes\tyes\tyes") != std::string::npos);
  CHECK_THROWS_AS((void)classify(3, 4), Error);
}
