#include <doctest.h>

#include "tcyc/subset.hpp"

using tcyc::SetSystem;
using tcyc::Subset;

TEST_SUITE("subset") {
  TEST_CASE("basic operations") {
    const Subset s(5, {1, 3});
    CHECK(s.size() == 2);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(s.max() == 3);
    CHECK(s.with(5).members() == std::vector<int>{1, 3, 5});
    CHECK(s.without(1).members() == std::vector<int>{3});
    CHECK(s.to_string() == "{1,3}");
    CHECK(Subset::prefix(5, 3) == Subset(5, {1, 2, 3}));
    CHECK_THROWS(Subset(5, std::uint64_t{0}).max());
    CHECK_THROWS(Subset(3, {4}));
  }

  TEST_CASE("ordering is lexicographic on member lists") {
    CHECK(Subset(4, {1, 2}) < Subset(4, {1, 2, 3}));
    CHECK(Subset(4, {1, 2, 3}) < Subset(4, {1, 3}));
    CHECK(Subset(4, {1, 3}) < Subset(4, {2}));
  }

  TEST_CASE("set systems sort, deduplicate and test intersection") {
    const SetSystem g(4, {Subset(4, {2, 3}), Subset(4, {1, 2}), Subset(4, {1, 2})});
    CHECK(g.size() == 2);
    CHECK(g.sets().front() == Subset(4, {1, 2}));
    CHECK(tcyc::is_t_intersecting(g, 1));
    CHECK_FALSE(tcyc::is_t_intersecting(g, 2));
    // a member meets itself, so a lone 1-set is not 2-intersecting
    CHECK_FALSE(tcyc::is_t_intersecting(SetSystem(4, {Subset(4, {1})}), 2));
  }
}
