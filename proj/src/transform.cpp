#include "tcyc/transform.hpp"

#include <stdexcept>
#include <string>

#include "tcyc/intersect.hpp"
#include "tcyc/io.hpp"

namespace tcyc {

namespace {

void check_point(const Permutation& sigma, int x) {
  if (x < 1 || x > sigma.degree())
    throw std::out_of_range("point " + std::to_string(x) + " outside [1, " + std::to_string(sigma.degree()) + "]");
}

int preimage(const Permutation& sigma, int y) {
  for (int x = 1; x <= sigma.degree(); ++x)
    if (sigma(x) == y) return x;
  throw std::logic_error("permutation is not surjective");
}

// Membership is tested against the input family, not the partially rewritten one.
template <class Rewrite>
PermFamily apply_family(const PermFamily& family, Rewrite rewrite, long long* changed = nullptr) {
  std::vector<Permutation> out;
  out.reserve(family.size());
  long long count = 0;
  for (const auto& sigma : family) {
    Permutation r = rewrite(sigma);
    if (r != sigma && !family.contains(r)) {
      out.push_back(std::move(r));
      ++count;
    } else {
      out.push_back(sigma);
    }
  }
  if (changed) *changed = count;
  PermFamily result(family.degree(), std::move(out));
  if (result.size() != family.size()) throw std::logic_error("family operator changed the family size");
  return result;
}

template <class Rewrite>
bool closed_under(const PermFamily& family, Rewrite rewrite) {
  for (const auto& sigma : family) {
    Permutation r = rewrite(sigma);
    if (r != sigma && !family.contains(r)) return false;
  }
  return true;
}

template <class Sweep, class Potential>
ClosureResult close(const PermFamily& family, Sweep sweep, Potential potential) {
  ClosureResult result{family, {}};
  auto& trace = result.trace;
  trace.potential_before = potential(family);
  for (;;) {
    const long long applied = sweep(result.family);
    ++trace.passes;
    trace.applications += applied;
    trace.applications_per_pass.push_back(applied);
    trace.potential_per_pass.push_back(potential(result.family));
    if (applied == 0) break;
  }
  trace.potential_after = potential(result.family);
  return result;
}

}  // namespace

Permutation ij_fix_perm(const Permutation& sigma, int i, int j) {
  check_point(sigma, i);
  check_point(sigma, j);
  if (i == j) throw std::invalid_argument("ij-fixing requires i != j");
  if (sigma(i) != j) return sigma;
  const int k = preimage(sigma, i);
  std::vector<int> image = sigma.image();
  image[i - 1] = i;
  image[k - 1] = j;
  return Permutation(std::move(image));
}

Permutation compress_perm(const Permutation& sigma, int i, int j) {
  check_point(sigma, i);
  check_point(sigma, j);
  if (i >= j) throw std::invalid_argument("compression requires i < j");
  if (sigma(i) == i || sigma(j) != j) return sigma;
  const int k = preimage(sigma, i);
  std::vector<int> image = sigma.image();
  image[i - 1] = i;
  image[j - 1] = sigma(i);
  image[k - 1] = j;
  return Permutation(std::move(image));
}

PermFamily ij_fix_family(const PermFamily& family, int i, int j) {
  if (i == j) throw std::invalid_argument("ij-fixing requires i != j");
  return apply_family(family, [&](const Permutation& s) { return ij_fix_perm(s, i, j); });
}

PermFamily compress_family(const PermFamily& family, int i, int j) {
  if (i >= j) throw std::invalid_argument("compression requires i < j");
  return apply_family(family, [&](const Permutation& s) { return compress_perm(s, i, j); });
}

ClosureResult fix_closure(const PermFamily& family) {
  const int n = family.degree();
  auto sweep = [n](PermFamily& f) {
    long long applied = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        long long c = 0;
        f = apply_family(f, [&](const Permutation& s) { return ij_fix_perm(s, i, j); }, &c);
        applied += c;
      }
    return applied;
  };
  return close(family, sweep, total_fixed_points);
}

ClosureResult compress_closure(const PermFamily& family) {
  const int n = family.degree();
  auto sweep = [n](PermFamily& f) {
    long long applied = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        long long c = 0;
        f = apply_family(f, [&](const Permutation& s) { return compress_perm(s, i, j); }, &c);
        applied += c;
      }
    return applied;
  };
  return close(family, sweep, fixed_point_weight);
}

bool is_fixed_family(const PermFamily& family) {
  // Only pairs (i, sigma(i)) with sigma(i) != i can rewrite sigma.
  for (const auto& sigma : family)
    for (int i = 1; i <= family.degree(); ++i) {
      const int j = sigma(i);
      if (j == i) continue;
      if (!family.contains(ij_fix_perm(sigma, i, j))) return false;
    }
  return true;
}

bool is_compressed_family(const PermFamily& family) {
  const int n = family.degree();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!closed_under(family, [&](const Permutation& s) { return compress_perm(s, i, j); })) return false;
  return true;
}

CheckOutcome stabilizer_pullback_check(const PermFamily& original, const PermFamily& transformed, int t) {
  const int n = original.degree();
  if (transformed.degree() != n) return CheckOutcome::hypothesis_not_met("degree mismatch");
  if (!(n > t + 1)) return CheckOutcome::hypothesis_not_met("requires n > t+1");
  if (original.size() != transformed.size()) return CheckOutcome::hypothesis_not_met("family sizes differ");
  if (!is_family_t_cycle_intersecting(original, t))
    return CheckOutcome::hypothesis_not_met("original family is not t-cycle-intersecting");
  const auto target = stabilized_points(transformed, t);
  if (!target) return CheckOutcome::pass("transformed family is not a stabilizer; implication holds vacuously");
  if (auto source = stabilized_points(original, t))
    return CheckOutcome::pass("both are stabilizers: " + source->to_string() + " -> " + target->to_string());
  return CheckOutcome::fail("transformed family stabilizes " + target->to_string() + " but the original is no stabilizer",
                            {{"original", to_json(original)}, {"transformed", to_json(transformed)}, {"t", t}});
}

CheckOutcome compression_preserves_intersection(const PermFamily& family, int t, int i, int j) {
  if (!is_family_t_cycle_intersecting(family, t)) return CheckOutcome::hypothesis_not_met("family not in I(n,t)");
  if (!is_fixed_family(family)) return CheckOutcome::hypothesis_not_met("family is not fixed");
  const PermFamily compressed = compress_family(family, i, j);
  if (auto bad = find_non_intersecting_pair(compressed, t))
    return CheckOutcome::fail("compression broke t-cycle-intersection",
                              {{"family", to_json(family)},
                               {"i", i},
                               {"j", j},
                               {"t", t},
                               {"pair", {to_json(bad->first), to_json(bad->second)}}});
  return CheckOutcome::pass();
}

CheckOutcome compression_preserves_fixedness(const PermFamily& family, int t, int i, int j, const Limits& limits) {
  if (!is_family_t_cycle_intersecting(family, t)) return CheckOutcome::hypothesis_not_met("family not in I(n,t)");
  if (!is_fixed_family(family)) return CheckOutcome::hypothesis_not_met("family is not fixed");
  if (!is_maximal(family, t, limits)) return CheckOutcome::hypothesis_not_met("family is not maximal");
  const PermFamily compressed = compress_family(family, i, j);
  if (!is_fixed_family(compressed))
    return CheckOutcome::fail("compression of a maximal fixed family is not fixed",
                              {{"family", to_json(family)}, {"i", i}, {"j", j}, {"t", t}});
  return CheckOutcome::pass();
}

}  // namespace tcyc
