#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tcyc/extremal.hpp"
#include "tcyc/io.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tcyc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "tcyc_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify theorem14 passes at (5,2)") {
    const auto r = run({"verify", "--suite", "theorem14", "--n", "5", "--t", "2"});
    CHECK(r.code == 0);
    CHECK(r.report()["all_passed"] == true);
  }

  TEST_CASE("extremal comparison at (8,4)") {
    const auto r = run({"extremal", "--n", "8", "--t", "4", "--families", "F0,F1", "--compare"});
    REQUIRE(r.code == 0);
    const auto j = r.report();
    CHECK(j["sizes"]["F0"]["size"] == 24);
    CHECK(j["sizes"]["F1"]["size"] == 26);
    CHECK(j["verdicts"][0] == "F1 > F0");
  }

  TEST_CASE("quadratic table") {
    const auto r = run({"extremal", "quad", "--t-max", "50"});
    CHECK(r.code == 0);
    CHECK(r.report()["all_hold"] == true);
    CHECK(r.report()["below_range_example"]["value"] == 4);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({"search", "--n", "5", "--t", "2", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--suite", "pipeline", "--n", "5", "--t", "2"}).code == 2);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run({"search", "--n", "7", "--t", "3"}).code == 2);
    CHECK(run({"transform", "--in", "/nonexistent/family.json"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("malformed families are rejected with their location") {
    const auto path = scratch() / "bad.json";
    std::ofstream(path) << R"({"n": 3, "perms": [[1,2,3],[2,2,1]]})";
    const auto r = run({"gensets", "--family", path.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("/perms/1") != std::string::npos);
  }

  TEST_CASE("transform and gensets on files") {
    const auto dir = scratch();
    const auto in = dir / "f.json";
    tcyc::write_json_file(in, tcyc::to_json(tcyc::f_i_family(6, 3, 1)));
    const auto out = dir / "t.json";
    const auto r = run({"transform", "--in", in.string(), "--pipeline", "fix-closure,compress-closure", "--t", "3",
                        "--trace", "--out", out.string()});
    REQUIRE(r.code == 0);
    const auto j = tcyc::read_json_file(out);
    CHECK(j["steps"].size() == 2);
    CHECK(j["steps"][1]["size_after"] == 6);
    CHECK(j["is_fixed"] == true);
    CHECK(j["is_compressed"] == true);
    CHECK(j["steps"][0].contains("trace"));

    const auto stab = dir / "s.json";
    tcyc::write_json_file(stab, tcyc::to_json(tcyc::stabilizer_family({1, 2}, 5)));
    const auto g = run({"gensets", "--family", stab.string(), "--derive", "--check", "all"});
    REQUIRE(g.code == 0);
    CHECK(g.report()["t"] == 2);
    CHECK(g.report()["certificate"]["s_plus"] == 2);
    CHECK(run({"gensets", "--family", stab.string(), "--check", "nope"}).code == 2);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("search output and flags") {
    const auto r = run({"search", "--n", "5", "--t", "2", "--enumerate-all", "--workers", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.report()["max_size"] == 6);
    CHECK(r.report()["witness_count"] == 10);
    const auto partial = run({"search", "--n", "6", "--t", "2", "--time-budget", "0.000001"});
    CHECK(partial.code == 1);
    CHECK(partial.report()["complete"] == false);
  }

  TEST_CASE("pipeline suite through the command line") {
    const auto r = run({"verify", "--suite", "pipeline", "--n", "5", "--t", "2", "--trials", "20", "--seed", "42"});
    CHECK(r.code == 0);
  }
}
