#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "tcyc/extremal.hpp"
#include "tcyc/intersect.hpp"
#include "tcyc/transform.hpp"

using namespace tcyc;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

PermFamily random_family(int n, std::size_t size, std::mt19937_64& rng) {
  const auto all = all_permutations(n, 7);
  std::vector<Permutation> members;
  for (std::size_t k = 0; k < size; ++k) members.push_back(all[rng() % all.size()]);
  return PermFamily(n, std::move(members));
}

std::vector<int> sorted_cycle_type(const Permutation& p) {
  auto c = cycle_type(p);
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

TEST_SUITE("transform") {
  TEST_CASE("ij-fixing of single permutations") {
    CHECK(ij_fix_perm(P({2, 3, 1}), 1, 3) == P({2, 3, 1}));
    CHECK(ij_fix_perm(P({2, 3, 1}), 1, 2) == P({1, 3, 2}));
    CHECK(ij_fix_perm(P({2, 1}), 1, 2) == Permutation::identity(2));
    CHECK_THROWS(ij_fix_perm(P({2, 1}), 1, 1));
    CHECK_THROWS(ij_fix_perm(P({2, 1}), 1, 3));
  }

  TEST_CASE("ij-fixing raises the fixed-point count by 0, 1 or 2") {
    tcyc::for_each_permutation(5, [](const Permutation& s) {
      for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j) {
          if (i == j) continue;
          const int before = s.fixed_point_count();
          const int after = ij_fix_perm(s, i, j).fixed_point_count();
          if (s(i) == j)
            CHECK((after == before + 1 || after == before + 2));
          else
            CHECK(after == before);
        }
    });
  }

  TEST_CASE("ij-fixing of families uses the original family for membership") {
    const PermFamily two(2, {P({2, 1}), P({1, 2})});
    CHECK(ij_fix_family(two, 1, 2) == two);
    CHECK(ij_fix_family(PermFamily(3, {P({2, 1, 3})}), 1, 2) == PermFamily(3, {P({1, 2, 3})}));
    const auto stab = stabilizer_family({1, 2}, 5);
    CHECK(ij_fix_family(stab, 3, 4) == stab);
  }

  TEST_CASE("compression of single permutations") {
    CHECK(compress_perm(P({1, 3, 2}), 1, 2) == P({1, 3, 2}));
    CHECK(compress_perm(P({2, 1, 3}), 1, 3) == P({1, 3, 2}));
    CHECK(compress_perm(P({3, 2, 1}), 1, 2) == P({1, 3, 2}));
    CHECK_THROWS(compress_perm(P({3, 2, 1}), 2, 1));
    tcyc::for_each_permutation(5, [](const Permutation& s) {
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
          const auto r = compress_perm(s, i, j);
          CHECK(sorted_cycle_type(r) == sorted_cycle_type(s));
          CHECK(r.fixed_point_count() == s.fixed_point_count());
        }
    });
  }

  TEST_CASE("compression of families") {
    const PermFamily f(3, {P({1, 3, 2}), P({3, 2, 1})});
    CHECK(compress_family(f, 1, 2) == f);
    const auto stab = stabilizer_family({1, 2}, 4);
    CHECK(compress_family(stab, 1, 3) == stab);
  }

  TEST_CASE("family operators preserve size on random families") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 3 + trial % 3;
      const auto f = random_family(n, 1 + rng() % 30, rng);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          CHECK(ij_fix_family(f, i, j).size() == f.size());
          if (i < j) CHECK(compress_family(f, i, j).size() == f.size());
        }
    }
  }

  TEST_CASE("closures: examples, termination and potentials") {
    const auto stab = stabilizer_family({1, 2}, 5);
    const auto fc = fix_closure(stab);
    CHECK(fc.family == stab);
    CHECK(fc.trace.passes == 1);
    CHECK(fc.trace.applications == 0);
    CHECK(compress_closure(stab).family == stab);

    const PermFamily f(3, {P({2, 1, 3}), P({1, 3, 2})});
    const auto r = fix_closure(f);
    CHECK(r.family.size() == 2);
    CHECK(is_fixed_family(r.family));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = random_family(4 + trial % 2, 1 + rng() % 40, rng);
      const auto a = fix_closure(g);
      const auto b = compress_closure(a.family);
      CHECK(a.family.size() == g.size());
      CHECK(b.family.size() == g.size());
      CHECK(is_fixed_family(a.family));
      CHECK(is_compressed_family(b.family));
      CHECK(a.trace.applications_per_pass.back() == 0);
      CHECK(b.trace.applications_per_pass.back() == 0);
      CHECK(a.trace.potential_after == total_fixed_points(a.family));
      for (std::size_t k = 1; k < a.trace.potential_per_pass.size(); ++k)
        if (a.trace.applications_per_pass[k] > 0)
          CHECK(a.trace.potential_per_pass[k] > a.trace.potential_per_pass[k - 1]);
      for (std::size_t k = 1; k < b.trace.potential_per_pass.size(); ++k)
        if (b.trace.applications_per_pass[k] > 0)
          CHECK(b.trace.potential_per_pass[k] < b.trace.potential_per_pass[k - 1]);
    }
  }

  TEST_CASE("compression moves any stabilizer to the stabilizer of [t]") {
    CHECK(compress_closure(stabilizer_family({4, 5}, 5)).family == stabilizer_family({1, 2}, 5));
    CHECK(compress_closure(stabilizer_family({3}, 4)).family == stabilizer_family({1}, 4));
  }

  TEST_CASE("fixed and compressed predicates") {
    const auto stab = stabilizer_family({1, 2}, 5);
    CHECK(is_fixed_family(stab));
    CHECK(is_compressed_family(stab));
    CHECK_FALSE(is_fixed_family(PermFamily(3, {P({2, 1, 3})})));
    CHECK_FALSE(is_fixed_family(PermFamily(3, {P({1, 3, 2})})));
  }

  TEST_CASE("preservation properties on maximal families at n = 5, t = 2") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
      const auto seed = Permutation::unrank(5, rng() % 120);
      if (cycle_decomposition(seed).size() < 2) continue;
      const auto m = maximalize(PermFamily(5, {seed}), 2);
      for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
          if (i != j) CHECK(is_family_t_cycle_intersecting(ij_fix_family(m, i, j), 2));
      const auto fixed = fix_closure(m).family;
      for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
          CHECK_FALSE(compression_preserves_intersection(fixed, 2, i, j).failed());
          CHECK_FALSE(compression_preserves_fixedness(fixed, 2, i, j).failed());
        }
      CHECK(stabilizer_pullback_check(m, compress_closure(fixed).family, 2).status != CheckStatus::fail);
    }
  }

  TEST_CASE("stabilizer pullback and hypothesis reporting") {
    const auto stab = stabilizer_family({1, 2}, 5);
    CHECK(stabilizer_pullback_check(stab, stab, 2).passed());
    // transformed family a stabilizer, original not: the implication is violated
    const auto f1 = f_i_family(6, 3, 1);
    const auto bad = stabilizer_pullback_check(f1, stabilizer_family({1, 2, 3}, 6), 3);
    CHECK(bad.failed());
    CHECK_FALSE(bad.witness.is_null());
    const auto bogus = f_i_family(5, 1, 1);
    const auto cmp = stabilizer_pullback_check(bogus, stabilizer_family({1}, 5), 1);
    CHECK(cmp.status == CheckStatus::hypothesis_not_met);  // sizes differ
    const PermFamily tiny(3, {Permutation::identity(3)});
    CHECK(stabilizer_pullback_check(tiny, tiny, 2).status == CheckStatus::hypothesis_not_met);  // n = t+1
    CHECK(compression_preserves_fixedness(PermFamily(3, {P({2, 1, 3})}), 1, 1, 2).status ==
          CheckStatus::hypothesis_not_met);
  }
}
