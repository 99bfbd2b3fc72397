#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tcyc/extremal.hpp"
#include "tcyc/gensets.hpp"
#include "tcyc/intersect.hpp"
#include "tcyc/transform.hpp"

using namespace tcyc;

namespace {

SetSystem all_k_subsets(int n, int within, int k) {
  std::vector<Subset> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << within); ++m)
    if (std::popcount(m) == k) out.emplace_back(n, m);
  return SetSystem(n, out);
}

/// Repeat maximalize, fix closure, compression closure until maximal.
PermFamily saturate(PermFamily f, int t) {
  for (;;) {
    f = compress_closure(fix_closure(f).family).family;
    if (is_maximal(f, t)) return f;
    f = maximalize(f, t);
  }
}

}  // namespace

TEST_SUITE("gensets") {
  TEST_CASE("up-permutations") {
    CHECK(up_perm(Subset(3, std::uint64_t{0})).size() == 6);
    CHECK(up_perm(Subset(4, {1, 2})).size() == 2);
    CHECK(up_perm(Subset::prefix(4, 4)) == PermFamily(4, {Permutation::identity(4)}));
    const SetSystem g(3, {Subset(3, {1}), Subset(3, {2})});
    CHECK(up_perm_system(g).size() == 3);
    CHECK(up_perm_system(SetSystem(5, {Subset(5, {2, 4})})) == up_perm(Subset(5, {2, 4})));
    CHECK(up_perm_system(SetSystem(5, {Subset::prefix(5, 2)})) == stabilizer_family({1, 2}, 5));
  }

  TEST_CASE("up-permutation counting agrees with enumeration") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + trial % 3;
      std::vector<Subset> sets;
      for (int k = 0; k < 1 + static_cast<int>(rng() % 5); ++k)
        sets.emplace_back(n, rng() & ((std::uint64_t{1} << n) - 1));
      const SetSystem g(n, sets);
      CHECK(up_perm_system_size(g) == up_perm_system(g).size());
    }
  }

  TEST_CASE("generating sets and fix systems") {
    const auto stab2 = stabilizer_family({1, 2}, 4);
    CHECK(is_generating_set(SetSystem(4, {Subset::prefix(4, 2)}), stab2));
    CHECK_FALSE(is_generating_set(SetSystem(4, {Subset(4, {1})}), stab2));
    CHECK(fix_system(stab2) == SetSystem(4, {Subset(4, {1, 2}), Subset(4, {1, 2, 3, 4})}));
    CHECK(fix_system(PermFamily(3, {Permutation::identity(3)})) == SetSystem(3, {Subset::prefix(3, 3)}));
  }

  TEST_CASE("left shifting") {
    CHECK(left_shift_set(Subset(4, {1, 2})) == SetSystem(4, {Subset(4, {1, 2})}));
    CHECK(left_shift_set(Subset(4, {2, 3})) ==
          SetSystem(4, {Subset(4, {1, 2}), Subset(4, {1, 3}), Subset(4, {2, 3})}));
    for (int k = 1; k <= 6; ++k) CHECK(left_shift_set(Subset(6, {k})).size() == static_cast<std::size_t>(k));
    const SetSystem chain(4, {Subset(4, {1}), Subset(4, {1, 2})});
    CHECK(minimal_elements(chain) == SetSystem(4, {Subset(4, {1})}));
    const SetSystem anti(4, {Subset(4, {1, 2}), Subset(4, {3, 4})});
    CHECK(minimal_elements(anti) == anti);
    CHECK(lstar(SetSystem(4, {Subset(4, {2, 3})})) == left_shift_set(Subset(4, {2, 3})));
  }

  TEST_CASE("s+") {
    CHECK(s_plus(Subset::prefix(6, 3)) == 3);
    CHECK(s_plus_system(SetSystem(4, {Subset(4, {1, 2}), Subset(4, {1, 3})})) == 3);
    for (int t = 1; t <= 3; ++t) {
      std::vector<int> pts;
      for (int x = 1; x <= t; ++x) pts.push_back(x);
      CHECK(s_plus_system(lstar(fix_system(stabilizer_family(pts, 5)))) == t);
    }
    CHECK_THROWS(s_plus_system(SetSystem(4, {})));
  }

  TEST_CASE("D-sets against the formula and the oracle") {
    CHECK(d_set(Subset(5, {1, 2})).size() == 6);
    CHECK(d_set(Subset(5, {1, 3})).size() == 4);
    CHECK(d_set(Subset::prefix(4, 4)) == PermFamily(4, {Permutation::identity(4)}));
    CHECK(d_size_formula(5, 2, 2) == 6);
    CHECK(d_size_formula(5, 2, 3) == 4);
    for (int n = 1; n <= 6; ++n)
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const Subset e(n, m);
        const auto expected = oracle::count_fix_pattern(n, m, e.max());
        REQUIRE(d_size_formula(n, e.size(), e.max()) == expected);
        REQUIRE(d_set(e).size() == expected);
        REQUIRE(d_prime_set(e).size() == oracle::count_fix_pattern(n, e.without(e.max()).mask(), e.max() - 1));
      }
    for (int n = 1; n <= 8; ++n)
      for (int k = 0; k <= n; ++k) CHECK(count_fixing_exactly(n, k, k) == factorial(n - k));
  }

  TEST_CASE("D' bound") {
    const auto strict = d_prime_bound_check(Subset(5, {1, 3}));
    CHECK(strict.passed());
    CHECK(d_prime_set(Subset(5, {1, 3})).size() == 18);
    CHECK(d_prime_set(Subset(5, {1, 2})).size() == 24);
    CHECK(d_prime_bound_check(Subset(5, {1, 2})).passed());
    CHECK(d_prime_bound_check(Subset::prefix(5, 5)).passed());
    // |E| = n-2 with s+(E) = n: equality although s+(E) > |E|
    CHECK(d_prime_set(Subset(5, {1, 2, 5})).size() == 3);
    CHECK(d_set(Subset(5, {1, 2, 5})).size() == 1);
    CHECK(d_prime_bound_check(Subset(5, {1, 2, 5})).passed());
    for (int n = 1; n <= 6; ++n)
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) CHECK(d_prime_bound_check(Subset(n, m)).passed());
  }

  TEST_CASE("certificates") {
    const auto c = derive_certificate(stabilizer_family({1, 2}, 5));
    CHECK(c.system == SetSystem(5, {Subset::prefix(5, 2)}));
    CHECK(c.s_plus == 2);
    CHECK(c.is_generating_set);
    CHECK(c.is_left_compressed);
    CHECK(c.is_inclusion_minimal);
    CHECK_FALSE(c.has_forbidden_size);
  }

  TEST_CASE("lemma checks on a stabilizer") {
    const auto stab = stabilizer_family({1, 2}, 5);
    const SetSystem g = fix_system(stab);
    CHECK(existence_check(stab, 2).passed());
    CHECK(generating_set_intersection_check(g, stab, 2).passed());
    CHECK(lstar_properties_check(g, stab, 2).passed());
    CHECK(disjoint_union_check(stab, lstar(g), 2).passed());
    CHECK(pair_t_plus_one_check(lstar(g), 2).passed());
  }

  TEST_CASE("lemma checks on saturated families") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      const auto seed = Permutation::unrank(5, rng() % 120);
      if (cycle_decomposition(seed).size() < 2) continue;
      const auto f = saturate(maximalize(PermFamily(5, {seed}), 2), 2);
      const SetSystem g = fix_system(f);
      const SetSystem star = lstar(g);
      CHECK(is_generating_set(g, f));
      CHECK(up_perm_system(g) == f);
      CHECK(is_t_intersecting(g, 2));
      CHECK(existence_check(f, 2).passed());
      CHECK(lstar_properties_check(g, f, 2).passed());
      CHECK(disjoint_union_check(f, star, 2).passed());
      CHECK(pair_t_plus_one_check(star, 2).passed());
      CHECK(s_plus_system(star) <= s_plus_system(g));
    }
    const auto f1 = saturate(f_i_family(6, 3, 1), 3);
    CHECK(disjoint_union_check(f1, lstar(fix_system(f1)), 3).passed());
  }

  TEST_CASE("pair t+1 condition") {
    CHECK(pair_t_plus_one_check(SetSystem(6, {Subset::prefix(6, 3)}), 3).passed());
    CHECK(pair_t_plus_one_check(all_k_subsets(7, 5, 4), 3).passed());
    // {2,3,4} and {2,3,5} miss 1 and share 2, but meet in only 2 points
    const SetSystem bad = lstar(SetSystem(5, {Subset(5, {2, 3, 4}), Subset(5, {2, 3, 5})}));
    const auto o = pair_t_plus_one_check(bad, 2);
    CHECK(o.failed());
    CHECK(o.witness.contains("pair"));
    CHECK(pair_t_plus_one_check(SetSystem(5, {Subset(5, {2, 3})}), 2).status == CheckStatus::hypothesis_not_met);
  }

  TEST_CASE("partition by size class") {
    const auto g = all_k_subsets(7, 5, 4);
    const auto p = partition_g0_g1(g, 3);
    CHECK(p.delta == 2);
    CHECK(p.top.size() == 4);
    CHECK(p.rest == SetSystem(7, {Subset::prefix(7, 4)}));
    CHECK(p.classes.size() == 1);
    CHECK(p.classes.at(4) == p.top);
    CHECK_THROWS(partition_g0_g1(SetSystem(5, {Subset::prefix(5, 3)}), 3));
  }

  TEST_CASE("surgery on all 4-subsets of [5]") {
    const auto at7 = lemma31_surgery(all_k_subsets(7, 5, 4), 3, 4);
    CHECK(at7.delta == 2);
    CHECK(at7.kind == SurgeryReport::Case::middle_class);
    CHECK(at7.pivot == 1);
    CHECK(at7.t_prime == SetSystem(7, {Subset(7, {2, 3, 4})}));
    CHECK(at7.f_prime_minimal == SetSystem(7, {Subset(7, {2, 3, 4})}));
    CHECK(at7.original_size == 22);
    CHECK(at7.f_prime_size == 24);
    CHECK(at7.pigeonhole_bound_holds);
    CHECK(at7.f_prime_t_intersecting);
    CHECK(at7.strict_gain);
    const auto at6 = lemma31_surgery(all_k_subsets(6, 5, 4), 3, 4);
    CHECK(at6.original_size == 6);
    CHECK(at6.f_prime_size == 6);
    CHECK_FALSE(at6.strict_gain);
  }
}
