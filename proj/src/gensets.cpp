#include "tcyc/gensets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tcyc/intersect.hpp"
#include "tcyc/io.hpp"
#include "tcyc/transform.hpp"

namespace tcyc {

using nlohmann::json;

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t full_mask(int n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

/// Calls visit for every permutation whose fix set contains `fixed`.
template <class Visit>
void for_each_fixing(int n, std::uint64_t fixed, Visit visit) {
  std::vector<int> free_points;
  for (int x = 1; x <= n; ++x)
    if (!((fixed >> (x - 1)) & 1u)) free_points.push_back(x);
  const int m = static_cast<int>(free_points.size());
  if (m > 20 || factorial(m) > kMaxMaterializedFamily)
    throw std::length_error("up-permutation of size " + std::to_string(m) + "! exceeds the materialization guard");
  std::vector<int> arrangement = free_points;
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  do {
    for (int k = 0; k < m; ++k) image[free_points[k] - 1] = arrangement[k];
    visit(Permutation(image));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
}

void require_same_ground(const SetSystem& g, const PermFamily& family) {
  if (g.ground() != family.degree())
    throw std::invalid_argument("set system ground " + std::to_string(g.ground()) + " differs from family degree " +
                                std::to_string(family.degree()));
}

json pair_witness(const Subset& a, const Subset& b) { return json::array({to_json(a), to_json(b)}); }

}  // namespace

PermFamily up_perm(const Subset& b) {
  const int n = b.ground();
  if (n < 1) throw std::invalid_argument("up_perm requires n >= 1");
  std::vector<Permutation> out;
  for_each_fixing(n, b.mask(), [&](const Permutation& p) { out.push_back(p); });
  return PermFamily(n, std::move(out));
}

PermFamily up_perm_system(const SetSystem& system) {
  const int n = system.ground();
  std::vector<Permutation> out;
  for (const auto& b : system) for_each_fixing(n, b.mask(), [&](const Permutation& p) { out.push_back(p); });
  return PermFamily(n, std::move(out));
}

std::uint64_t up_perm_system_size(const SetSystem& system) {
  const auto& sets = system.sets();
  const std::size_t m = sets.size();
  if (m > 24) throw std::length_error("inclusion-exclusion over more than 24 sets");
  const int n = system.ground();
  i128 total = 0;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << m); ++pick) {
    std::uint64_t uni = 0;
    for (std::size_t k = 0; k < m; ++k)
      if ((pick >> k) & 1u) uni |= sets[k].mask();
    const auto term = static_cast<i128>(factorial(n - std::popcount(uni)));
    total += (std::popcount(pick) % 2 == 1) ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

bool is_generating_set(const SetSystem& g, const PermFamily& family) {
  require_same_ground(g, family);
  const int n = family.degree();
  for (const auto& b : g)
    if (b.size() == n - 1) return false;
  return up_perm_system(g) == family;
}

SetSystem fix_system(const PermFamily& family) {
  std::vector<Subset> sets;
  sets.reserve(family.size());
  for (const auto& p : family) sets.push_back(p.fix_set());
  return SetSystem(family.degree(), std::move(sets));
}

SetSystem left_shift_set(const Subset& b) {
  const int n = b.ground();
  const auto bound = b.members();
  const int k = static_cast<int>(bound.size());
  std::vector<Subset> out;
  std::vector<int> chosen;
  // a_1 < a_2 < ... < a_k with a_r <= b_r.
  auto recurse = [&](auto&& self, int r, int lowest) -> void {
    if (r == k) {
      out.emplace_back(n, std::span<const int>(chosen));
      return;
    }
    for (int a = lowest; a <= bound[r]; ++a) {
      chosen.push_back(a);
      self(self, r + 1, a + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, 1);
  return SetSystem(n, std::move(out));
}

SetSystem left_shift_system(const SetSystem& system) {
  std::vector<Subset> out;
  for (const auto& b : system) {
    const auto shifted = left_shift_set(b);
    out.insert(out.end(), shifted.begin(), shifted.end());
  }
  return SetSystem(system.ground(), std::move(out));
}

SetSystem minimal_elements(const SetSystem& system) {
  std::vector<Subset> out;
  for (const auto& b : system) {
    const bool has_proper_subset = std::any_of(system.begin(), system.end(), [&](const Subset& a) {
      return a != b && a.is_subset_of(b);
    });
    if (!has_proper_subset) out.push_back(b);
  }
  return SetSystem(system.ground(), std::move(out));
}

SetSystem lstar(const SetSystem& system) { return minimal_elements(left_shift_system(system)); }

int s_plus(const Subset& b) { return b.max(); }

int s_plus_system(const SetSystem& system) {
  if (system.empty()) throw std::domain_error("s+ of an empty set system");
  int best = 0;
  for (const auto& b : system) best = std::max(best, s_plus(b));
  return best;
}

std::uint64_t count_fixing_exactly(int n, int k, int s) {
  if (!(0 <= k && k <= s && s <= n && n <= 20))
    throw std::invalid_argument("count_fixing_exactly requires 0 <= k <= s <= n <= 20");
  const int free_window = s - k;
  i128 total = 0;
  for (int j = 0; j <= free_window; ++j) {
    const auto term = static_cast<i128>(binomial(free_window, j)) * static_cast<i128>(factorial(n - k - j));
    total += (j % 2 == 0) ? term : -term;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t d_size_formula(int n, int k, int s) {
  if (k < 1) throw std::invalid_argument("d_size_formula requires |E| >= 1");
  if (k > s) throw std::invalid_argument("d_size_formula requires |E| <= s+(E)");
  if (s > n) throw std::invalid_argument("d_size_formula requires s+(E) <= n");
  return count_fixing_exactly(n, k, s);
}

PermFamily d_set(const Subset& e) {
  if (e.empty()) throw std::invalid_argument("D(E) requires a nonempty E");
  const int n = e.ground();
  const std::uint64_t window = full_mask(e.max());
  std::vector<Permutation> out;
  for_each_fixing(n, e.mask(), [&](const Permutation& p) {
    if ((p.fix_set().mask() & window) == e.mask()) out.push_back(p);
  });
  return PermFamily(n, std::move(out));
}

PermFamily d_prime_set(const Subset& e) {
  if (e.empty()) throw std::invalid_argument("D'(E) requires a nonempty E");
  const int n = e.ground();
  const int top = e.max();
  const Subset trimmed = e.without(top);
  const std::uint64_t window = full_mask(top - 1);
  std::vector<Permutation> out;
  for_each_fixing(n, trimmed.mask(), [&](const Permutation& p) {
    if ((p.fix_set().mask() & window) == trimmed.mask()) out.push_back(p);
  });
  return PermFamily(n, std::move(out));
}

std::uint64_t d_count(const Subset& e, const Limits& limits) {
  if (e.empty()) throw std::invalid_argument("D(E) requires a nonempty E");
  if (e.ground() <= limits.enumeration_cap) return d_set(e).size();
  return d_size_formula(e.ground(), e.size(), e.max());
}

bool is_left_compressed_system(const SetSystem& system) {
  for (const auto& b : system)
    for (const auto& a : left_shift_set(b)) {
      const bool covered =
          std::any_of(system.begin(), system.end(), [&](const Subset& c) { return c.is_subset_of(a); });
      if (!covered) return false;
    }
  return true;
}

GeneratingSetCertificate certify(const SetSystem& system, const PermFamily& family) {
  require_same_ground(system, family);
  GeneratingSetCertificate cert;
  cert.system = system;
  cert.family_size = family.size();
  const bool has_empty = std::any_of(system.begin(), system.end(), [](const Subset& b) { return b.empty(); });
  cert.s_plus = (system.empty() || has_empty) ? -1 : s_plus_system(system);
  cert.is_inclusion_minimal = minimal_elements(system) == system;
  cert.is_left_compressed = is_left_compressed_system(system);
  cert.has_forbidden_size = std::any_of(system.begin(), system.end(),
                                        [&](const Subset& b) { return b.size() == family.degree() - 1; });
  cert.is_generating_set = is_generating_set(system, family);
  return cert;
}

GeneratingSetCertificate derive_certificate(const PermFamily& family) {
  return certify(lstar(fix_system(family)), family);
}

CheckOutcome existence_check(const PermFamily& family, int t, const Limits& limits) {
  if (!is_family_t_cycle_intersecting(family, t)) return CheckOutcome::hypothesis_not_met("family not in I(n,t)");
  if (!is_fixed_family(family)) return CheckOutcome::hypothesis_not_met("family is not fixed");
  if (!is_maximal(family, t, limits)) return CheckOutcome::hypothesis_not_met("family is not maximal");
  const SetSystem fix = fix_system(family);
  if (!is_generating_set(fix, family))
    return CheckOutcome::fail("Fix(F) does not generate F", {{"family", to_json(family)}, {"fix", to_json(fix)}});
  return CheckOutcome::pass();
}

CheckOutcome generating_set_intersection_check(const SetSystem& g, const PermFamily& family, int t) {
  require_same_ground(g, family);
  const int n = family.degree();
  if (!(n > t + 1)) return CheckOutcome::hypothesis_not_met("requires n > t+1");
  if (!is_family_t_cycle_intersecting(family, t)) return CheckOutcome::hypothesis_not_met("family not in I(n,t)");
  if (!is_generating_set(g, family)) return CheckOutcome::hypothesis_not_met("system is not a generating set");
  const auto& sets = g.sets();
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a; b < sets.size(); ++b)
      if (sets[a].intersection_size(sets[b]) < t)
        return CheckOutcome::fail("generating set members meet in fewer than t points",
                                  {{"system", to_json(g)}, {"pair", pair_witness(sets[a], sets[b])}, {"t", t}});
  if (!g.empty() && s_plus_system(g) < t)
    return CheckOutcome::fail("generating set has s+ < t", {{"system", to_json(g)}, {"t", t}});
  return CheckOutcome::pass();
}

CheckOutcome lstar_properties_check(const SetSystem& g, const PermFamily& family, int t, const Limits& limits) {
  require_same_ground(g, family);
  if (!is_family_t_cycle_intersecting(family, t)) return CheckOutcome::hypothesis_not_met("family not in I(n,t)");
  if (!is_fixed_family(family)) return CheckOutcome::hypothesis_not_met("family is not fixed");
  if (!is_compressed_family(family)) return CheckOutcome::hypothesis_not_met("family is not compressed");
  if (!is_maximal(family, t, limits)) return CheckOutcome::hypothesis_not_met("family is not maximal");
  if (!is_generating_set(g, family)) return CheckOutcome::hypothesis_not_met("system is not a generating set");
  const SetSystem star = lstar(g);
  json base = {{"family", to_json(family)}, {"system", to_json(g)}, {"lstar", to_json(star)}, {"t", t}};
  if (!is_generating_set(star, family)) return CheckOutcome::fail("L*(g) does not generate F", base);
  if (!g.empty() && s_plus_system(star) > s_plus_system(g)) return CheckOutcome::fail("s+(L*(g)) > s+(g)", base);
  for (const auto& b : g)
    for (const auto& a : left_shift_set(b)) {
      const bool covered = std::any_of(star.begin(), star.end(), [&](const Subset& c) { return c.is_subset_of(a); });
      if (!covered) {
        base["uncovered_shift"] = to_json(a);
        return CheckOutcome::fail("a left shift of a member contains no member of L*(g)", base);
      }
    }
  return CheckOutcome::pass();
}

CheckOutcome disjoint_union_check(const PermFamily& family, const SetSystem& g, int t, const Limits& limits) {
  require_same_ground(g, family);
  if (!is_family_t_cycle_intersecting(family, t)) return CheckOutcome::hypothesis_not_met("family not in I(n,t)");
  if (!is_fixed_family(family)) return CheckOutcome::hypothesis_not_met("family is not fixed");
  if (!is_compressed_family(family)) return CheckOutcome::hypothesis_not_met("family is not compressed");
  if (!is_maximal(family, t, limits)) return CheckOutcome::hypothesis_not_met("family is not maximal");
  if (lstar(g) != g) return CheckOutcome::hypothesis_not_met("system is not in G*-form (L*(g) != g)");
  if (!is_generating_set(g, family)) return CheckOutcome::hypothesis_not_met("system is not a generating set");
  if (std::any_of(g.begin(), g.end(), [](const Subset& e) { return e.empty(); }))
    return CheckOutcome::hypothesis_not_met("system contains the empty set");

  std::vector<PermFamily> parts;
  parts.reserve(g.size());
  for (const auto& e : g) parts.push_back(d_set(e));
  const auto& sets = g.sets();
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (const auto& p : parts[a])
        if (parts[b].contains(p))
          return CheckOutcome::fail("D(E1) and D(E2) overlap",
                                    {{"family", to_json(family)},
                                     {"system", to_json(g)},
                                     {"pair", pair_witness(sets[a], sets[b])},
                                     {"common", to_json(p)}});
  std::vector<Permutation> uni;
  for (const auto& part : parts) uni.insert(uni.end(), part.begin(), part.end());
  const PermFamily joined(family.degree(), std::move(uni));
  if (joined != family) {
    json w = {{"family", to_json(family)}, {"system", to_json(g)}};
    for (const auto& p : family)
      if (!joined.contains(p)) {
        w["uncovered"] = to_json(p);
        break;
      }
    for (const auto& p : joined)
      if (!family.contains(p)) {
        w["extra"] = to_json(p);
        break;
      }
    return CheckOutcome::fail("union of D(E) differs from F", w);
  }
  return CheckOutcome::pass();
}

CheckOutcome pair_t_plus_one_check(const SetSystem& g, int t) {
  const int n = g.ground();
  if (!(n > t + 1)) return CheckOutcome::hypothesis_not_met("requires n > t+1");
  if (lstar(g) != g) return CheckOutcome::hypothesis_not_met("system is not in G*-form (L*(g) != g)");
  const auto& sets = g.sets();
  const std::uint64_t all = full_mask(n);
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      const std::uint64_t inter = sets[a].mask() & sets[b].mask();
      const std::uint64_t outside = all & ~(sets[a].mask() | sets[b].mask());
      if (inter == 0 || outside == 0) continue;
      // Some i < j exists iff the smallest outside point lies below the largest common point.
      const int smallest_outside = std::countr_zero(outside) + 1;
      const int largest_common = 64 - std::countl_zero(inter);
      if (smallest_outside < largest_common && std::popcount(inter) < t + 1)
        return CheckOutcome::fail("pair meets in fewer than t+1 points",
                                  {{"system", to_json(g)},
                                   {"pair", pair_witness(sets[a], sets[b])},
                                   {"i", smallest_outside},
                                   {"j", largest_common},
                                   {"t", t}});
    }
  return CheckOutcome::pass();
}

CheckOutcome d_prime_bound_check(const Subset& e) {
  const int n = e.ground();
  const auto d = d_set(e).size();
  const auto dp = d_prime_set(e).size();
  const auto bound = static_cast<std::uint64_t>(n - e.size() + 1) * d;
  // The extra member of D'(E) fixes exactly E' plus one point y < s+(E); with
  // |E| = n-2 and s+(E) = n that would leave a single non-fixed point.
  const bool no_extra_member = e.size() == n - 2 && e.max() == n;
  const bool strict_expected = e.max() > e.size() && !no_extra_member;
  json w = {{"E", to_json(e)}, {"n", n}, {"d", d}, {"d_prime", dp}, {"bound", bound}};
  if (dp < bound) return CheckOutcome::fail("|D'(E)| below (n-|E|+1)|D(E)|", w);
  if (strict_expected && dp == bound) return CheckOutcome::fail("bound not strict although s+(E) > |E|", w);
  if (!strict_expected && dp != bound) return CheckOutcome::fail("bound strict although no extra member exists", w);
  std::string detail = std::to_string(dp) + (strict_expected ? " > " : " = ") + std::to_string(bound);
  if (no_extra_member && e.max() > e.size()) detail += " (equality: |E| = n-2 and s+(E) = n)";
  return CheckOutcome::pass(detail);
}

SizeClassPartition partition_g0_g1(const SetSystem& g, int t) {
  if (g.empty()) throw std::invalid_argument("partition requires a nonempty system");
  const int top = s_plus_system(g);
  SizeClassPartition p;
  p.t = t;
  p.delta = top - t;
  if (p.delta <= 0) throw std::invalid_argument("s+(g) = " + std::to_string(top) + " <= t; nothing to partition");
  std::vector<Subset> top_sets, rest_sets;
  std::map<int, std::vector<Subset>> classes;
  for (const auto& b : g) {
    if (b.max() == top) {
      top_sets.push_back(b);
      classes[b.size()].push_back(b);
    } else {
      rest_sets.push_back(b);
    }
  }
  const int n = g.ground();
  p.top = SetSystem(n, std::move(top_sets));
  p.rest = SetSystem(n, std::move(rest_sets));
  for (auto& [size, members] : classes) {
    if (size <= t || size >= t + p.delta) p.classes_within_bounds = false;
    p.classes.emplace(size, SetSystem(n, std::move(members)));
  }
  return p;
}

namespace {

SetSystem without_classes(const SetSystem& g, const SetSystem& a, const SetSystem& b) {
  std::vector<Subset> keep;
  for (const auto& s : g)
    if (!a.contains(s) && !b.contains(s)) keep.push_back(s);
  return SetSystem(g.ground(), std::move(keep));
}

SetSystem strip_point(const SetSystem& system, int x) {
  std::vector<Subset> out;
  for (const auto& s : system) out.push_back(s.without(x));
  return SetSystem(system.ground(), std::move(out));
}

SetSystem merged(const SetSystem& a, const SetSystem& b) {
  std::vector<Subset> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return SetSystem(a.ground(), std::move(out));
}

}  // namespace

SurgeryReport lemma31_surgery(const SetSystem& g, int t, int size_class, const Limits& limits) {
  const int n = g.ground();
  if (n > limits.enumeration_cap) throw std::length_error("surgery exceeds the enumeration cap");
  const SizeClassPartition part = partition_g0_g1(g, t);
  const auto found = part.classes.find(size_class);
  if (found == part.classes.end() || found->second.empty())
    throw std::invalid_argument("size class R_" + std::to_string(size_class) + " is empty");

  SurgeryReport r;
  r.n = n;
  r.t = t;
  r.delta = part.delta;
  r.size_class = size_class;
  r.original_size = up_perm_system(g).size();
  const int top = t + part.delta;
  const SetSystem empty(n, {});
  const SetSystem& chosen = found->second;
  r.partner_class = 2 * t + part.delta - size_class;

  if (r.partner_class != size_class) {
    r.kind = SurgeryReport::Case::paired_classes;
    const auto partner_it = part.classes.find(r.partner_class);
    const SetSystem& partner = partner_it == part.classes.end() ? empty : partner_it->second;
    const SetSystem base = without_classes(g, chosen, partner);
    r.f1 = merged(base, strip_point(chosen, top));
    r.f2 = merged(base, strip_point(partner, top));
    r.f1_t_intersecting = is_t_intersecting(r.f1, t);
    r.f2_t_intersecting = is_t_intersecting(r.f2, t);
    r.f1_size = up_perm_system(r.f1).size();
    r.f2_size = up_perm_system(r.f2).size();
    r.best_size = std::max(r.f1_size, r.f2_size);
  } else {
    r.kind = SurgeryReport::Case::middle_class;
    const SetSystem stripped = strip_point(chosen, top);
    r.class_size = chosen.size();
    // Complement frequency of each a in [t+delta-1]; smallest a wins ties.
    int best_count = -1;
    for (int a = 1; a <= top - 1; ++a) {
      int count = 0;
      for (const auto& b : stripped) count += !b.contains(a);
      if (count > best_count) {
        best_count = count;
        r.pivot = a;
      }
    }
    std::vector<Subset> kept;
    for (const auto& b : stripped)
      if (!b.contains(r.pivot)) kept.push_back(b);
    r.t_prime = SetSystem(n, std::move(kept));
    r.f_prime = merged(without_classes(g, chosen, empty), r.t_prime);
    r.f_prime_minimal = minimal_elements(r.f_prime);
    r.f_prime_t_intersecting = is_t_intersecting(r.f_prime, t);
    r.f_prime_size = up_perm_system(r.f_prime).size();
    // |T'| >= |R| * delta / (2 (t + delta - 1)), in integers.
    r.pigeonhole_bound_holds = static_cast<long long>(r.t_prime.size()) * 2 * (top - 1) >=
                               static_cast<long long>(r.class_size) * part.delta;
    r.best_size = r.f_prime_size;
  }
  r.strict_gain = r.best_size > r.original_size;
  return r;
}

}  // namespace tcyc
