#include <doctest.h>

#include "tcyc/verify.hpp"

using namespace tcyc;

namespace {

const CheckRecord* find(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.check == name) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("theorem harness") {
    for (auto [n, t] : {std::pair{5, 2}, {3, 1}, {4, 1}, {5, 1}, {6, 2}}) {
      const auto r = verify_theorem_14(n, t);
      CHECK(r.all_passed());
      CHECK(r.count(CheckStatus::pass) == 5);
    }
    const auto low = verify_theorem_14(4, 2);
    CHECK(low.all_passed());
    CHECK(low.count(CheckStatus::hypothesis_not_met) == 1);
  }

  TEST_CASE("counterexample regime") {
    const auto eq = verify_counterexample_regime(6, 3);
    REQUIRE(eq.checks.size() == 1);
    CHECK(eq.checks[0].status == CheckStatus::pass);
    CHECK(eq.checks[0].detail.find("boundary") != std::string::npos);
    CHECK(verify_counterexample_regime(7, 4).all_passed());
    const auto big = verify_counterexample_regime(8, 5);
    CHECK(big.all_passed());
    CHECK(big.checks[0].detail.find("|F1| = 8") != std::string::npos);
    CHECK(verify_counterexample_regime(5, 2).checks[0].status == CheckStatus::hypothesis_not_met);
  }

  TEST_CASE("pipeline suite at (5,2)") {
    const auto r = pipeline_roundtrip(5, 2, 100, 42);
    CHECK(r.all_passed());
    for (const char* name : {"pipeline.fix_closure_size", "pipeline.compress_closure_size", "pipeline.output_fixed",
                             "pipeline.output_compressed", "gensets.existence", "gensets.disjoint_union",
                             "gensets.fix_system_intersecting", "gensets.lstar_intersecting"}) {
      const auto* c = find(r, name);
      REQUIRE(c != nullptr);
      CHECK(c->status == CheckStatus::pass);
      CHECK(c->detail.rfind("100 pass, 0 fail, 0 hypothesis-not-met", 0) == 0);
    }
  }

  TEST_CASE("pipeline reports are reproducible from the seed") {
    const auto a = pipeline_roundtrip(5, 2, 10, 7).to_json();
    const auto b = pipeline_roundtrip(5, 2, 10, 7).to_json();
    CHECK(a == b);
  }

  TEST_CASE("report JSON") {
    VerificationReport r;
    r.suite = "demo";
    r.add("ok", {{"n", 1}}, CheckOutcome::pass());
    r.add("bad", {{"n", 2}}, CheckOutcome::fail("broken", {{"x", 1}}));
    r.add("skip", {{"n", 3}}, CheckOutcome::hypothesis_not_met("needs more"));
    CHECK_FALSE(r.all_passed());
    const auto j = r.to_json();
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK(j["checks"][1]["witness"]["x"] == 1);
    CHECK(j["checks"][2]["status"] == "hypothesis-not-met");
    CHECK_FALSE(j["checks"][0].contains("witness"));
  }

  TEST_CASE("full suite at n <= 5") {
    const auto r = verify_all(5, 30, 1);
    CHECK(r.all_passed());
    CHECK(r.count(CheckStatus::fail) == 0);
  }
}
