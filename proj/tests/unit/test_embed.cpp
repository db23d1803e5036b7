#include <doctest.h>

#include <numeric>

#include "heffter/embed.hpp"
#include "heffter/search.hpp"
#include "heffter/tour.hpp"
#include "support.hpp"

using namespace heffter;

namespace {

const WeakArray& wh34() {
  static const WeakArray a = test::fixture("wh_3x4.txt");
  return a;
}

LineOrdering sol_a() { return orderings_from_orientations(wh34(), {-1, -1, 1, 1}, {1, 1, 1}); }

std::set<std::vector<int>> face_set(const EmbeddingReport& r) { return {r.faces.begin(), r.faces.end()}; }

/// A classical H(3,4) from the search together with compatible orderings, if one has any.
std::optional<std::pair<WeakArray, LineOrdering>> classical_compatible() {
  std::optional<std::pair<WeakArray, LineOrdering>> out;
  (void)search_arrays({ArrayContext::heffter(3, 4, 4, 3), SearchMode::classical, SearchGoal::enumerate},
                      [&](const WeakArray& h) {
                        const auto solutions = solve_tour(h, SolveStrategy::first);
                        if (solutions.empty()) return true;
                        out.emplace(h, orderings_from_orientations(h, solutions[0].C, solutions[0].R));
                        return false;
                      });
  return out;
}

std::vector<int> residues(std::vector<int> xs, int v) {
  for (int& x : xs) x = mod(x, v);
  return xs;
}

}  // namespace

TEST_CASE("orderings from orientations") {
  const auto ord = sol_a();
  CHECK(ord.rows[0] == std::vector<int>{1, 2, 3, 4});
  CHECK(ord.cols[0] == std::vector<int>{3, 2, 1});
  CHECK(ord.cols[2] == std::vector<int>{1, 2, 3});
  CHECK_THROWS_AS((void)orderings_from_orientations(wh34(), {1, 1, 1}, {1, 1, 1}), Error);
  CHECK_THROWS_AS((void)orderings_from_orientations(wh34(), {1, 1, 1, 2}, {1, 1, 1}), Error);
}

TEST_CASE("omega tables follow the orderings") {
  const auto t = omega_tables(wh34(), sol_a());
  CHECK(t.row_next[1] == 18);   // 1 -> -7 along row 1
  CHECK(t.row_next[12] == 1);   // wraps around
  CHECK(t.row_prev[18] == 1);
  CHECK(t.col_next[22] == 2);   // column 1 upwards: -3 -> 2 -> 1 -> -3
  CHECK(t.col_next[1] == 22);
  // column 3 downwards holds -6, then +-10 as -10, then +-9 as -9
  CHECK(t.col_next[19] == 15);
  CHECK(t.col_next[15] == 16);
  CHECK(t.col_next[10] == 0);
}

TEST_CASE("trace sequence") {
  const auto seq = trace_sequence(wh34(), sol_a(), 24);
  CHECK(seq.a == std::vector<int>{1, 3, -11, 7, 1, -2, -8, -5, -3, -2, -4, 7, -6, 10, -4, -11, 9, 10, -8, -12, -6, 9, 5, -12});
  CHECK(seq.mu == std::vector<int>{1, 1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, -1, -1, 1, 1, 1});
}

TEST_CASE("compatibility report") {
  const auto r = compatibility_report(wh34(), sol_a());
  CHECK(r.compatible);
  CHECK(r.pair_period == 24);
  CHECK(r.product_period == 24);
  CHECK(r.odd_period == 12);
  CHECK(r.pair_criterion);
  CHECK(r.distinct_criterion);
  CHECK(r.product_criterion);
  CHECK(r.odd_criterion);

  const auto other = orderings_from_orientations(wh34(), {1, 1, 1, 1}, {-1, 1, 1});
  const auto n = compatibility_report(wh34(), other);
  CHECK_FALSE(n.compatible);
  CHECK_FALSE(n.pair_criterion);
  CHECK_FALSE(n.odd_criterion);
}

TEST_CASE("the reference rotation and signature") {
  const auto rs = rotation_and_signature(wh34(), sol_a());
  CHECK(rs.cycle == std::vector<int>{1, 3, 11, -7, -1, 2, -8, -5, -3, -2, -4, 7, -6, -10, 4, -11, -9, 10, 8, 12, 6, 9, 5, -12});
  for (int x = 1; x < 25; ++x) {
    CAPTURE(x);
    const int s = symmetric(x, 25);
    CHECK(rs.epsilon[static_cast<std::size_t>(x)] == (std::abs(s) == 3 || std::abs(s) == 5 ? 1 : -1));
    CHECK(rs.prev[static_cast<std::size_t>(rs.next[static_cast<std::size_t>(x)])] == x);
  }
  CHECK_THROWS_AS((void)rotation_and_signature(wh34(), orderings_from_orientations(wh34(), {1, 1, 1, 1}, {-1, 1, 1})), Error);
  CHECK_THROWS_AS((void)rotation_and_signature(test::fixture("swh6_3_3.txt"), {}), Error);
}

TEST_CASE("the face rotation agrees with rotation_and_signature on classical arrays") {
  const auto found = classical_compatible();
  REQUIRE(found);
  const auto& [h, ord] = *found;
  const auto plain = rotation_and_signature(h, ord);
  const auto face = face_rotation(h, ord);
  CHECK(plain.cycle == face.cycle);
  CHECK(plain.epsilon == face.epsilon);
}

TEST_CASE("the embedding of K_25") {
  const auto r = archdeacon_embedding(wh34(), sol_a());
  CHECK(r.vertices == 25);
  CHECK(r.edges == 300);
  CHECK(r.faces.size() == 175);
  const auto lengths = r.face_lengths();
  CHECK(std::accumulate(lengths.begin(), lengths.end(), 0) == 600);
  CHECK(std::count(lengths.begin(), lengths.end(), 3) == 100);
  CHECK(std::count(lengths.begin(), lengths.end(), 4) == 75);
  CHECK(r.chi == -100);
  CHECK_FALSE(r.orientable);
  CHECK_FALSE(r.orientable_balance);
  CHECK_FALSE(r.orientable_signature);
  CHECK(r.crosscap == 102);
  CHECK(r.regular);
  CHECK(regularity_check(r));
}

TEST_CASE("row and column faces are faces of the embedding") {
  const auto& a = wh34();
  const auto ord = sol_a();
  const auto faces = face_set(archdeacon_embedding(a, ord));
  for (const auto& cell : a.skeleton()) {
    const auto& e = *a.at(cell);
    for (int x = 0; x < 25; ++x) {
      const auto row = row_face(a, ord, e.row_value(), x);
      CHECK(row.size() == 4);
      CHECK(faces.count(canonical_cycle(residues(row, 25))) == 1);
      const auto col = column_face(a, ord, neg_mod(e.column_value(25), 25), x);
      CHECK(col.size() == 3);
      CHECK(faces.count(canonical_cycle(residues(col, 25))) == 1);
    }
  }
  CHECK_THROWS_AS((void)row_face(a, ord, 13, 0), Error);  // 13 = -12 is not a row value
}

TEST_CASE("canonical cycles") {
  CHECK(canonical_cycle({3, 1, 2}) == std::vector<int>{1, 2, 3});
  CHECK(canonical_cycle({3, 2, 1}) == std::vector<int>{1, 2, 3});
  CHECK(canonical_cycle({2, 0, 5, 1}) == canonical_cycle({1, 5, 0, 2}));
}

TEST_CASE("a classical instance embeds orientably") {
  const auto found = classical_compatible();
  REQUIRE(found);
  const auto r = archdeacon_embedding(found->first, found->second);
  CHECK(r.orientable);
  CHECK(r.orientable_balance);
  CHECK(r.orientable_signature);
  CHECK(r.genus == (2 - r.chi) / 2);
  const auto lengths = r.face_lengths();
  CHECK(std::count(lengths.begin(), lengths.end(), 4) == 75);
  CHECK(std::count(lengths.begin(), lengths.end(), 3) == 100);
}

TEST_CASE("report serialization") {
  const auto r = archdeacon_embedding(wh34(), sol_a());
  const auto j = r.to_json();
  CHECK(j.find("\"orientable\":false") != std::string::npos);
  CHECK(r.to_text().find("faces 175") != std::string::npos);
}
