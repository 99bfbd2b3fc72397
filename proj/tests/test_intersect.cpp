#include <doctest.h>

#include <sstream>

#include "oracle.hpp"
#include "tcyc/extremal.hpp"
#include "tcyc/intersect.hpp"

using namespace tcyc;

namespace {
Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }
}  // namespace

TEST_SUITE("intersect") {
  TEST_CASE("common cycles on examples") {
    const auto s = P({2, 3, 1, 5, 4});
    CHECK(common_cycle_count(s, s) == 2);
    using C = std::vector<Permutation::Cycle>;
    CHECK(common_cycles(P({1, 2, 4, 3}), P({1, 2, 3, 4})) == C{{1}, {2}});
    CHECK(common_cycles(P({2, 1, 3, 4}), P({1, 2, 4, 3})).empty());
    CHECK(is_t_cycle_intersecting_pair(P({1, 2, 4, 3}), P({1, 2, 3, 4}), 2));
    CHECK_FALSE(is_t_cycle_intersecting_pair(P({2, 1, 3, 4}), P({1, 2, 4, 3}), 1));
  }

  TEST_CASE("common cycle count agrees with the oracle on all of S_5 x S_5") {
    const auto perms = oracle::all_perms(5);
    for (const auto& a : perms)
      for (const auto& b : perms) REQUIRE(common_cycle_count(P(a), P(b)) == oracle::common_cycles(a, b));
  }

  TEST_CASE("cycle intersection implies pointwise intersection") {
    const auto perms = oracle::all_perms(4);
    for (const auto& a : perms)
      for (const auto& b : perms)
        for (int t = 0; t <= 4; ++t)
          if (is_t_cycle_intersecting_pair(P(a), P(b), t)) CHECK(is_t_intersecting_pair(P(a), P(b), t));
  }

  TEST_CASE("family predicates") {
    CHECK(is_family_t_cycle_intersecting(stabilizer_family({1, 2}, 5), 2));
    CHECK_FALSE(is_family_t_cycle_intersecting(PermFamily(3, all_permutations(3, 7)), 1));
    CHECK(is_family_t_cycle_intersecting(PermFamily(4), 3));
    CHECK(is_family_t_cycle_intersecting(PermFamily(3, {P({2, 3, 1})}), 1));
    CHECK_FALSE(is_family_t_cycle_intersecting(PermFamily(3, {P({2, 3, 1})}), 2));
    CHECK(intersection_strength(stabilizer_family({1, 2}, 5)) == 2);
    CHECK(stabilized_points(stabilizer_family({2, 4}, 5), 2) == Subset(5, {2, 4}));
    CHECK_FALSE(stabilized_points(f_i_family(6, 3, 1), 3).has_value());
  }

  TEST_CASE("intersection graph") {
    const auto g3 = IntersectionGraph::build(3, 1);
    CHECK(g3.vertex_count() == 6);
    CHECK(g3.degree(Permutation::identity(3).rank()) == 3);
    const auto g4 = IntersectionGraph::build(4, 2);
    CHECK(g4.degree(0) == 6);
    const auto perms = oracle::all_perms(4);
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = 0; b < perms.size(); ++b)
        CHECK(g4.adjacent(a, b) == (a != b && oracle::common_cycles(perms[a], perms[b]) >= 2));
    std::ostringstream out;
    g3.write_dimacs(out);
    CHECK(out.str().find("\np edge 6 ") != std::string::npos);
    CHECK_THROWS_AS(IntersectionGraph::build(8, 2), std::length_error);
  }

  TEST_CASE("maximality") {
    CHECK(is_maximal(stabilizer_family({1, 2}, 5), 2));
    const PermFamily single(5, {Permutation::identity(5)});
    CHECK_FALSE(is_maximal(single, 2));
    const auto m = maximalize(single, 2);
    CHECK(m.contains(Permutation::identity(5)));
    CHECK(is_family_t_cycle_intersecting(m, 2));
    CHECK(is_maximal(m, 2));
    CHECK_THROWS_AS(is_maximal(PermFamily(3, all_permutations(3, 7)), 1), std::invalid_argument);
  }
}
