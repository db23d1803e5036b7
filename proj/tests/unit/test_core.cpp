#include <doctest.h>

#include "heffter/array.hpp"
#include "heffter/io.hpp"
#include "heffter/modular.hpp"
#include "heffter/verify.hpp"
#include "support.hpp"

using namespace heffter;

TEST_CASE("modular helpers") {
  CHECK(mod(-1, 25) == 24);
  CHECK(mod(50, 25) == 0);
  CHECK(neg_mod(0, 7) == 0);
  CHECK(neg_mod(3, 7) == 4);
  CHECK(symmetric(12, 25) == 12);
  CHECK(symmetric(13, 25) == -12);
  CHECK(symmetric(13, 26) == 13);
  CHECK(canonical_class(-3, 25).rep == 3);
  CHECK(canonical_class(22, 25).rep == 3);
  CHECK_THROWS_AS((void)canonical_class(50, 25), std::invalid_argument);
}

TEST_CASE("subgroup of order t") {
  const Subgroup j(24, 6);
  CHECK(j.elements() == std::vector<int>{0, 4, 8, 12, 16, 20});
  CHECK(j.contains(12));
  CHECK_FALSE(j.contains(6));
  // 9 classes of (Z_24 \ J)/+-
  CHECK(j.classes() == std::vector<int>{1, 2, 3, 5, 6, 7, 9, 10, 11});
}

TEST_CASE("array context") {
  const auto ctx = ArrayContext::heffter(3, 4, 4, 3);
  CHECK(ctx.v == 25);
  CHECK(ctx.class_count() == 12);
  CHECK(ctx.heffter_shaped());
  CHECK(ArrayContext::heffter(3, 3, 3, 3, 6).v == 24);
  CHECK_THROWS_AS((void)ArrayContext::heffter(3, 4, 3, 3), Error);     // nk != mh
  CHECK_THROWS_AS((void)ArrayContext::heffter(3, 3, 3, 3, 4), Error);  // 4 does not divide 18
  CHECK_FALSE(ArrayContext::grid(3, 3, 24, 6).heffter_shaped());
}

TEST_CASE("entries keep a row value and derive the column value") {
  WeakArray a(ArrayContext::heffter(3, 4, 4, 3));
  a.set(1, 1, {24, true});
  REQUIRE(a.at(1, 1));
  CHECK(a.at(1, 1)->row_value() == 24);
  CHECK(a.at(1, 1)->column_value(25) == 1);
  CHECK(a.split_count() == 1);
  a.set(2, 3, {-4, false});
  CHECK(a.at(2, 3)->a == 21);
  CHECK(a.skeleton() == std::vector<Cell>{{1, 1}, {2, 3}});
  a.clear(1, 1);
  CHECK_FALSE(a.filled(1, 1));
  CHECK_THROWS_AS(a.set(1, 1, {0, false}), Error);
  CHECK_THROWS_AS((void)a.at(4, 1), Error);

  WeakArray rel(ArrayContext::heffter(3, 3, 3, 3, 6));
  CHECK_THROWS_AS(rel.set(1, 1, {4, false}), Error);  // 4 lies in J
}

TEST_CASE("text format") {
  const std::string text = "v=25 t=1 m=3 n=4\n1|-7|-6|12\n2|-4|+-10|-+8\n-3|-+11|+-9|5\n";
  const auto a = io::parse_text(text);
  CHECK(a.context().h == 4);
  CHECK(a.context().k == 3);
  CHECK(a.at(2, 3)->a == 10);
  CHECK(a.at(2, 3)->split);
  CHECK(a.at(2, 4)->a == 17);
  CHECK(a.at(2, 4)->split);
  CHECK(io::format_text(a) == text);
  CHECK(io::format_cell(a.at(3, 2), 25) == "-+11");
  CHECK(io::format_cell(std::nullopt, 25) == ".");
  // the typeset sign characters are accepted on input
  CHECK(io::parse_text("v=25 t=1 m=3 n=4\n1|-7|-6|12\n2|-4|±10|∓8\n-3|∓11|±9|5\n") == a);

  CHECK_THROWS_AS((void)io::parse_text("v=25 t=1 m=3\n1|2|3\n"), Error);
  CHECK_THROWS_AS((void)io::parse_text("v=25 t=1 m=1 n=2\n1|x\n"), Error);
  CHECK_THROWS_AS((void)io::parse_text("v=25 t=1 m=2 n=2\n1|2\n"), Error);
}

TEST_CASE("json format round-trips") {
  const auto a = test::fixture("wh_3x4.txt");
  const auto j = io::format_json(a);
  CHECK(io::parse_json(j) == a);
  CHECK(io::parse_any(j) == a);
  CHECK(io::parse_any(io::format_text(a)) == a);
}

TEST_CASE("every fixture round-trips byte-identically") {
  for (const auto& entry : test::manifest()) {
    CAPTURE(entry.file);
    const auto text = io::read_file(test::fixture_path(entry.file));
    CHECK(io::format_text(io::parse_text(text)) == text);
  }
}

TEST_CASE("fixtures verify in their claimed modes") {
  for (const auto& entry : test::manifest()) {
    CAPTURE(entry.file);
    const auto a = test::fixture(entry.file);
    const auto report = verify(a, entry.mode);
    CHECK_MESSAGE(report.ok, report.to_text());
    CHECK(verify_integer(a).ok == entry.integer);
    CHECK(test::oracle_is_weak(a, a.context().h, a.context().k));
    if (!is_classical(entry.mode)) continue;
    CHECK(a.split_count() == 0);
  }
}

TEST_CASE("verification reports the violated condition") {
  auto a = test::fixture("wh_3x4.txt");
  CHECK_FALSE(verify(a, Mode::classical).ok);
  CHECK(verify(a, Mode::classical).failures() == std::vector<Condition>{Condition::unsplit});

  auto broken = a;
  broken.set(1, 1, {2, false});  // class 2 twice, class 1 missing, row 1 off by one
  const auto report = verify(broken, Mode::weak);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.passed(Condition::support));
  CHECK_FALSE(report.passed(Condition::zero_sums));
  CHECK(report.passed(Condition::line_counts));

  const auto rel = test::fixture("swh6_3_3.txt");
  CHECK_FALSE(verify(rel, Mode::weak).ok);  // t = 6 is not allowed outside relative modes
  CHECK_FALSE(verify(rel, Mode::weak).passed(Condition::trivial_subgroup));
  CHECK(verify(rel, Mode::relative_weak).ok);

  auto short_row = a;
  short_row.clear(1, 4);
  CHECK_FALSE(verify(short_row, Mode::weak).passed(Condition::line_counts));
}

TEST_CASE("mode names") {
  for (auto m : {Mode::classical, Mode::weak, Mode::relative_classical, Mode::relative_weak})
    CHECK(parse_mode(to_string(m)) == m);
  CHECK_THROWS_AS((void)parse_mode("strong"), Error);
}

TEST_CASE("theta, omega and lambda") {
  const auto a = test::fixture("wh_3x4.txt");
  const auto [theta, omega] = theta_omega(a);
  CHECK(theta.size() == 8);
  CHECK(omega == std::vector<Cell>{{2, 3}, {2, 4}, {3, 2}, {3, 3}});
  CHECK(lambda(a, 1) == 1);
  CHECK(lambda(a, 10) == -1);
  CHECK(lambda(a, 15) == -1);  // -10
  const auto table = lambda_table(a);
  for (int x = 1; x < 25; ++x) CHECK(table[static_cast<std::size_t>(x)] == table[static_cast<std::size_t>(25 - x)]);
}

TEST_CASE("transposition swaps the sign roles") {
  for (const auto& entry : test::manifest()) {
    CAPTURE(entry.file);
    const auto a = test::fixture(entry.file);
    const auto b = a.transposed();
    CHECK(b.rows() == a.cols());
    CHECK(b.context().h == a.context().k);
    CHECK(verify(b, entry.mode).ok);
    CHECK(b.transposed() == a);
  }
}

TEST_CASE("integer sums") {
  CHECK(verify_integer(test::fixture("h_8_6.txt")).ok);
  CHECK_FALSE(verify_integer(test::fixture("wh_3x4.txt")).ok);
}
