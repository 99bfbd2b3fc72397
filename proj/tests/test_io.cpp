#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "tcyc/extremal.hpp"
#include "tcyc/io.hpp"

using namespace tcyc;
using nlohmann::json;

TEST_SUITE("io") {
  TEST_CASE("family round trip") {
    const auto f = stabilizer_family({1, 2}, 4);
    const json j = to_json(f);
    CHECK(j["n"] == 4);
    CHECK(j["perms"][0] == json::array({1, 2, 3, 4}));
    CHECK(family_from_json(j) == f);
  }

  TEST_CASE("cycle notation is accepted for members") {
    const json j = {{"n", 5}, {"perms", {"(1 2 3)(4 5)", json::array({1, 2, 3, 4, 5})}}};
    const auto f = family_from_json(j);
    CHECK(f.size() == 2);
    CHECK(f.contains(Permutation({2, 3, 1, 5, 4})));
  }

  TEST_CASE("malformed input names its location") {
    const json bad = {{"n", 3}, {"perms", {json::array({1, 2, 3}), json::array({1, 1, 3})}}};
    try {
      family_from_json(bad);
      FAIL("expected a format error");
    } catch (const FormatError& e) {
      CHECK(std::string(e.what()).find("/perms/1") != std::string::npos);
    }
    CHECK_THROWS_AS(family_from_json(json{{"perms", json::array()}}), FormatError);
    CHECK_THROWS_AS(family_from_json(json{{"n", 3}, {"perms", {json::array({1, 2})}}}), FormatError);
    CHECK_THROWS_AS(set_system_from_json(json{{"n", 3}, {"sets", {json::array({4})}}}), FormatError);
  }

  TEST_CASE("set systems") {
    const SetSystem g(4, {Subset(4, {1, 2}), Subset(4, {2, 3})});
    CHECK(set_system_from_json(to_json(g)) == g);
  }

  TEST_CASE("files") {
    const auto dir = std::filesystem::temp_directory_path() / "tcyc_io_test";
    std::filesystem::create_directories(dir);
    write_json_file(dir / "f.json", to_json(stabilizer_family({1}, 3)));
    CHECK(family_from_json(read_json_file(dir / "f.json")) == stabilizer_family({1}, 3));
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK_THROWS_AS(read_json_file(dir / "broken.json"), FormatError);
    CHECK_THROWS_AS(read_json_file(dir / "missing.json"), FormatError);
    std::filesystem::remove_all(dir);
  }
}
