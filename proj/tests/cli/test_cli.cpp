#include <doctest.h>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome heffter_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), {"--data-dir", heffter::test::data_dir().string()});
  const int code = heffter::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return heffter::test::fixture_path(name).string(); }

}  // namespace

TEST_CASE("verify") {
  auto r = heffter_cli({"verify", fx("h_8_6.txt"), "--mode", "classical", "--integer"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("mode classical: pass", 0) == 0);
  r = heffter_cli({"verify", fx("wh_3x4.txt"), "--mode", "classical"});
  CHECK(r.code == 1);
  r = heffter_cli({"--format", "json", "verify", fx("swh6_3_3.txt"), "--mode", "relative-weak"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ok"] == true);
  r = heffter_cli({"verify", fx("wh_3x4.txt"), "--mode", "bogus"});
  CHECK(r.code == 2);
}

TEST_CASE("strictness") {
  auto r = heffter_cli({"strictness", fx("swh6_3_3.txt")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("STRICTLY WEAK", 0) == 0);
  r = heffter_cli({"strictness", fx("h_8_6_lines.txt")});
  CHECK(r.code == 1);
  CHECK(heffter::verify(heffter::io::parse_text(r.out), heffter::Mode::classical).ok);
  r = heffter_cli({"--format", "json", "strictness", fx("h_8_6_lines.txt")});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["strictly_weak"] == false);
  CHECK(heffter::verify(heffter::io::parse_text(j["witness"].get<std::string>()), heffter::Mode::classical).ok);
  CHECK(heffter_cli({"strictness", fx("h_8_6.txt")}).code == 1);
}

TEST_CASE("search") {
  auto r = heffter_cli({"search", "--m", "3", "--n", "3", "--h", "3", "--k", "3", "--t", "9", "--mode", "weak"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("none", 0) == 0);
  r = heffter_cli({"search", "--m", "3", "--n", "3", "--h", "3", "--k", "3", "--t", "6", "--mode", "strictly-weak"});
  CHECK(r.code == 0);
  CHECK(heffter::verify(heffter::io::parse_text(r.out), heffter::Mode::relative_weak).ok);
  r = heffter_cli({"--format", "json", "search", "--m", "3", "--n", "3", "--h", "3", "--k", "3", "--t", "6", "--goal",
                   "count"});
  CHECK(nlohmann::json::parse(r.out)["placements"] == 12);
  r = heffter_cli({"search", "--m", "4", "--n", "4", "--h", "3", "--k", "3", "--t", "2", "--budget-nodes", "3"});
  CHECK(r.code == 3);
  CHECK(r.err.find("inconclusive") != std::string::npos);
  r = heffter_cli({"search", "--m", "3", "--n", "3", "--h", "3", "--k", "3", "--t", "6", "--goal", "enumerate", "--mode",
                   "strictly-weak"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), 'v') == 128);  // one header per array
}

TEST_CASE("classify and systems") {
  auto r = heffter_cli({"classify", "--n", "3", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["rows"].size() == 6);
  r = heffter_cli({"systems", "--v", "32", "--t", "8", "--k", "3"});
  CHECK(r.out == "{1,14,-15} {2,7,-9} {3,10,-13} {5,6,-11}\n");
  r = heffter_cli({"systems", "--v", "22", "--t", "3", "--k", "3"});
  CHECK(r.code == 2);
}

TEST_CASE("construct") {
  auto r = heffter_cli({"construct", "wh5", "--n", "12"});
  CHECK(r.code == 0);
  CHECK(r.out == heffter::io::read_file(heffter::test::fixture_path("wh5_12_5.txt")));
  r = heffter_cli({"construct", "wh5", "--n", "12", "--stage", "base"});
  CHECK(r.out == heffter::io::read_file(heffter::test::fixture_path("h3_12_3.txt")));
  CHECK(heffter_cli({"construct", "wh5", "--n", "13"}).code == 2);
  CHECK(heffter_cli({"construct", "wh7"}).code == 2);
}

TEST_CASE("tour") {
  auto r = heffter_cli({"tour", fx("wh_3x4.txt"), "--orient=-1,-1,1,1/1,1,1", "--certify"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("(1,1,1)\n(3,2,-1)\n", 0) == 0);
  CHECK(r.out.find("certificate (1,1)") != std::string::npos);
  r = heffter_cli({"tour", fx("wh_3x4.txt"), "--orient=1,1,1,1/-1,1,1"});
  CHECK(r.code == 1);
  r = heffter_cli({"--format", "json", "tour", fx("wh_3x4.txt"), "--solve", "all"});
  CHECK(nlohmann::json::parse(r.out)["solutions"].size() == 48);
  r = heffter_cli({"tour", fx("wh_3x4.txt"), "--solve", "first"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
  CHECK(heffter_cli({"tour", fx("wh_3x4.txt"), "--orient=1,1/1", "--solve", "all"}).code == 2);
}

TEST_CASE("embed") {
  auto r = heffter_cli({"embed", fx("wh_3x4.txt"), "--orient=-1,-1,1,1/1,1,1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["orientable"] == false);
  CHECK(j["chi"] == -100);
  r = heffter_cli({"embed", fx("wh_3x4.txt"), "--orient=-1,-1,1,1/1,1,1", "--report", "text"});
  CHECK(r.out.find("faces 175") != std::string::npos);
  CHECK(heffter_cli({"embed", fx("wh_3x4.txt"), "--orient=1,1,1,1/-1,1,1"}).code == 1);
}

TEST_CASE("repro targets match their golden files") {
  for (const auto& target : heffter::cli::repro_targets()) {
    CAPTURE(target);
    const auto r = heffter_cli({"repro", target});
    CHECK(r.code == 0);
    CHECK(r.out.find("matches golden") != std::string::npos);
  }
  CHECK(heffter_cli({"repro", "nope"}).code == 2);
}

TEST_CASE("repro reports a mismatch against a modified golden file") {
  const auto tmp = std::filesystem::temp_directory_path() / "heffter-cli-test";
  std::filesystem::remove_all(tmp);
  std::filesystem::copy(heffter::test::data_dir(), tmp, std::filesystem::copy_options::recursive);
  {
    std::ofstream golden(tmp / "golden" / "t33.txt");
    golden << "classical: 1 3\nstrictly-weak: 6\n";
  }
  std::ostringstream out, err;
  const int code = heffter::cli::run({"--data-dir", tmp.string(), "repro", "t33"}, out, err);
  CHECK(code == 1);
  CHECK(out.str().find("MISMATCH") != std::string::npos);
  CHECK(out.str().find("line 1") != std::string::npos);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("usage errors") {
  CHECK(heffter_cli({}).code == 2);
  CHECK(heffter_cli({"frobnicate"}).code == 2);
  CHECK(heffter_cli({"verify"}).code == 2);
  CHECK(heffter_cli({"verify", "/nonexistent/file.txt"}).code == 2);
  CHECK(heffter_cli({"--format", "yaml", "classify", "--n", "3", "--k", "3"}).code == 2);
  CHECK(heffter_cli({"--help"}).code == 0);
}
