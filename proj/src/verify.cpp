#include "tcyc/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>

#include "tcyc/extremal.hpp"
#include "tcyc/gensets.hpp"
#include "tcyc/intersect.hpp"
#include "tcyc/io.hpp"
#include "tcyc/transform.hpp"

namespace tcyc {

using nlohmann::json;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

CheckOutcome expect(bool ok, const std::string& detail, json witness = nullptr) {
  return ok ? CheckOutcome::pass(detail) : CheckOutcome::fail(detail, std::move(witness));
}

/// Tallies one check over many instances and keeps the first failure.
class Tally {
public:
  void add(const std::string& check, const CheckOutcome& o, const json& context = nullptr) {
    Entry& e = entries_[check];
    if (e.order == 0) e.order = ++next_order_;
    switch (o.status) {
      case CheckStatus::pass: ++e.passed; break;
      case CheckStatus::hypothesis_not_met:
        ++e.skipped;
        if (e.skip_reason.empty()) e.skip_reason = o.detail;
        break;
      case CheckStatus::fail:
        if (e.failed++ == 0) {
          e.first_failure = o.detail;
          e.witness = o.witness;
          if (!context.is_null()) e.witness = json{{"context", context}, {"witness", o.witness}};
        }
        break;
    }
  }

  void flush(VerificationReport& report, const json& params) const {
    std::vector<std::pair<int, const std::pair<const std::string, Entry>*>> ordered;
    for (const auto& kv : entries_) ordered.emplace_back(kv.second.order, &kv);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [order, kv] : ordered) {
      const Entry& e = kv->second;
      CheckRecord r;
      r.check = kv->first;
      r.params = params;
      r.detail = std::to_string(e.passed) + " pass, " + std::to_string(e.failed) + " fail, " +
                 std::to_string(e.skipped) + " hypothesis-not-met";
      if (e.failed > 0) {
        r.status = CheckStatus::fail;
        r.detail += "; first failure: " + e.first_failure;
        r.witness = e.witness;
      } else if (e.passed > 0) {
        r.status = CheckStatus::pass;
      } else {
        r.status = CheckStatus::hypothesis_not_met;
        r.detail += "; " + e.skip_reason;
      }
      report.checks.push_back(std::move(r));
    }
  }

private:
  struct Entry {
    int order = 0;
    long passed = 0, failed = 0, skipped = 0;
    std::string first_failure, skip_reason;
    json witness;
  };
  std::map<std::string, Entry> entries_;
  int next_order_ = 0;
};

/// Uniform over S_n by Lehmer rank (modulo reduction keeps the stream portable),
/// rejecting permutations with fewer than t cycles.
Permutation random_seed_permutation(int n, int t, std::mt19937_64& rng) {
  const std::uint64_t total = factorial(n);
  for (;;) {
    Permutation p = Permutation::unrank(n, rng() % total);
    if (static_cast<int>(cycle_decomposition(p).size()) >= t) return p;
  }
}

}  // namespace

void VerificationReport::add(std::string check, json params, const CheckOutcome& outcome) {
  checks.push_back({std::move(check), std::move(params), outcome.status, outcome.detail,
                    outcome.failed() ? outcome.witness : json(nullptr)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool VerificationReport::all_passed() const { return count(CheckStatus::fail) == 0; }

std::size_t VerificationReport::count(CheckStatus status) const {
  std::size_t c = 0;
  for (const auto& r : checks) c += r.status == status;
  return c;
}

json VerificationReport::to_json() const {
  json out{{"suite", suite}, {"all_passed", all_passed()}};
  out["summary"] = {{"pass", count(CheckStatus::pass)},
                    {"fail", count(CheckStatus::fail)},
                    {"hypothesis-not-met", count(CheckStatus::hypothesis_not_met)}};
  out["checks"] = json::array();
  for (const auto& r : checks) {
    json rec{{"check", r.check}, {"params", r.params}, {"status", to_string(r.status)}};
    if (!r.detail.empty()) rec["detail"] = r.detail;
    if (!r.witness.is_null()) rec["witness"] = r.witness;
    out["checks"].push_back(std::move(rec));
  }
  return out;
}

VerificationReport verify_theorem_14(int n, int t, const SearchOptions& options) {
  VerificationReport report;
  report.suite = "theorem14";
  const json params{{"n", n}, {"t", t}};
  if (t < 1 || n < 2 * t + 1) {
    report.add("theorem14", params, CheckOutcome::hypothesis_not_met("requires t >= 1 and n >= 2t+1"));
    return report;
  }
  SearchOptions opts = options;
  opts.mode = SearchMode::enumerate_all;
  const CliqueSearchResult r = max_family_search(n, t, opts);

  report.add("theorem14.search_complete", params,
             expect(r.complete, r.complete ? "exhaustive" : "time budget exhausted before completion"));
  report.add("theorem14.witnesses_valid", params,
             expect(r.witnesses_valid, "witnesses are t-cycle-intersecting, maximal and of maximum size"));
  const std::uint64_t expected = factorial(n - t);
  report.add("theorem14.max_size", params,
             expect(r.max_size == expected,
                    "max size " + std::to_string(r.max_size) + ", (n-t)! = " + std::to_string(expected),
                    json{{"max_size", r.max_size}, {"expected", expected}}));
  const std::uint64_t pairs = binomial(n, t);
  report.add("theorem14.witness_count", params,
             expect(r.witness_count == pairs,
                    std::to_string(r.witness_count) + " maximum families, C(n,t) = " + std::to_string(pairs),
                    json{{"witness_count", r.witness_count}}));
  CheckOutcome structure = CheckOutcome::pass("every maximum family is a stabilizer of t points");
  for (const auto& w : r.witnesses) {
    const auto pts = stabilized_points(w, t);
    if (!pts || stabilizer_family(pts->members(), n) != w) {
      structure = CheckOutcome::fail("maximum family is not a stabilizer of t points", to_json(w));
      break;
    }
  }
  report.add("theorem14.stabilizer_witnesses", params, structure);
  return report;
}

VerificationReport verify_counterexample_regime(int n, int t, const Limits& limits) {
  VerificationReport report;
  report.suite = "counterexample";
  const json params{{"n", n}, {"t", t}};
  if (t < 1 || n < t + 3 || n >= 2 * t + 1) {
    report.add("counterexample", params, CheckOutcome::hypothesis_not_met("requires t+3 <= n < 2t+1"));
    return report;
  }
  const ExtremalComparison cmp = compare_extremal(n, t, {1}, limits);
  const auto f0 = cmp.sizes.at("F0");
  const auto f1 = cmp.sizes.at("F1");
  const std::string sizes = "|F1| = " + std::to_string(f1.size) + " (" + f1.method + "), |F0| = " +
                            std::to_string(f0.size) + " (" + f0.method + ")";
  const json witness{{"F0", f0.size}, {"F1", f1.size}};
  if (t == 3) {
    CheckOutcome o = expect(f1.size >= f0.size, sizes, witness);
    if (o.passed() && f1.size == f0.size) o.detail += "; equality at the t = 3 boundary case";
    report.add("counterexample.f1_vs_f0", params, o);
  } else {
    report.add("counterexample.f1_vs_f0", params, expect(f1.size > f0.size, sizes, witness));
  }
  return report;
}

VerificationReport pipeline_roundtrip(int n, int t, int trials, std::uint64_t seed, const Limits& limits) {
  if (n > limits.enumeration_cap)
    throw std::length_error("pipeline at n = " + std::to_string(n) + " exceeds the enumeration cap");
  if (t < 1 || t > n) throw std::invalid_argument("pipeline requires 1 <= t <= n");
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  VerificationReport report;
  report.suite = "pipeline";
  std::mt19937_64 rng(seed);
  Tally tally;
  int output_maximal = 0, output_resaturated = 0;

  for (int trial = 0; trial < trials; ++trial) {
    const Permutation start = random_seed_permutation(n, t, rng);
    const json ctx{{"trial", trial}, {"seed_permutation", to_json(start)}};
    const PermFamily seeded = maximalize(PermFamily(n, {start}), t, limits);
    const PermFamily fixed = fix_closure(seeded).family;
    const PermFamily out = compress_closure(fixed).family;

    auto with = [&](const PermFamily& f) {
      json c = ctx;
      c["family"] = to_json(f);
      return c;
    };
    tally.add("pipeline.seed_maximal", expect(is_maximal(seeded, t, limits), "maximalized seed"), ctx);
    tally.add("pipeline.fix_closure_size",
              expect(fixed.size() == seeded.size(), "fix closure keeps the size", with(seeded)));
    tally.add("pipeline.compress_closure_size",
              expect(out.size() == fixed.size(), "compression closure keeps the size", with(fixed)));
    tally.add("pipeline.fix_closure_intersecting",
              expect(is_family_t_cycle_intersecting(fixed, t), "fix closure stays in I(n,t)", with(seeded)));
    tally.add("pipeline.output_intersecting",
              expect(is_family_t_cycle_intersecting(out, t), "output stays in I(n,t)", with(fixed)));
    tally.add("pipeline.output_fixed", expect(is_fixed_family(out), "output is fixed", with(out)));
    tally.add("pipeline.output_compressed", expect(is_compressed_family(out), "output is compressed", with(out)));
    tally.add("pipeline.pullback_fix", stabilizer_pullback_check(seeded, fixed, t), ctx);
    tally.add("pipeline.pullback_compress", stabilizer_pullback_check(fixed, out, t), ctx);
    tally.add("pipeline.pullback_total", stabilizer_pullback_check(seeded, out, t), ctx);

    if (const auto pts = stabilized_points(seeded, t)) {
      const PermFamily initial = stabilizer_family(Subset::prefix(n, t).members(), n);
      tally.add("pipeline.stabilizer_seed", expect(out == initial, "a stabilizer seed ends at the stabilizer of [t]",
                                                   with(seeded)));
      if (*pts == Subset::prefix(n, t))
        tally.add("pipeline.stabilizer_of_initial_points_unchanged",
                  expect(seeded == out, "the stabilizer of [t] passes through unchanged", with(seeded)));
    }

    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        tally.add("compression.preserves_intersection", compression_preserves_intersection(fixed, t, i, j), ctx);
        tally.add("compression.preserves_fixedness", compression_preserves_fixedness(fixed, t, i, j, limits), ctx);
      }

    // Fixing can break maximality, and the generating-set lemmas need it; repeat the
    // pipeline until the family is maximal. Each round strictly grows the family.
    PermFamily sat = out;
    int rounds = 0;
    while (!is_maximal(sat, t, limits)) {
      ++rounds;
      const PermFamily grown = maximalize(sat, t, limits);
      const PermFamily grown_fixed = fix_closure(grown).family;
      sat = compress_closure(grown_fixed).family;
      tally.add("pipeline.resaturated_size", expect(sat.size() == grown.size(), "closures keep the size", with(grown)));
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          tally.add("compression.preserves_fixedness",
                    compression_preserves_fixedness(grown_fixed, t, i, j, limits), ctx);
    }
    ++(rounds == 0 ? output_maximal : output_resaturated);
    tally.add("pipeline.resaturated_form",
              expect(is_family_t_cycle_intersecting(sat, t) && is_fixed_family(sat) && is_compressed_family(sat),
                     "re-saturated family is in I(n,t), fixed and compressed", with(sat)));

    const SetSystem g = fix_system(sat);
    const SetSystem star = lstar(g);
    tally.add("gensets.existence", existence_check(sat, t, limits), ctx);
    tally.add("gensets.fix_system_intersecting", generating_set_intersection_check(g, sat, t), ctx);
    tally.add("gensets.lstar_intersecting", generating_set_intersection_check(star, sat, t), ctx);
    tally.add("gensets.lstar_properties", lstar_properties_check(g, sat, t, limits), ctx);
    tally.add("gensets.disjoint_union", disjoint_union_check(sat, star, t, limits), ctx);
    tally.add("gensets.pair_t_plus_one", pair_t_plus_one_check(star, t), ctx);
    for (const auto& e : star)
      if (!e.empty()) tally.add("gensets.d_prime_bound", d_prime_bound_check(e), ctx);

    if (!star.empty()) {
      const int sp = s_plus_system(star);
      tally.add("gensets.s_plus_at_least_t", expect(sp >= t, "s+(L*(Fix F)) = " + std::to_string(sp), with(sat)));
      if (sp == t)
        tally.add("gensets.s_plus_t_is_stabilizer",
                  expect(stabilized_points(sat, t).has_value(), "s+ = t forces a stabilizer", with(sat)));
    }
  }
  tally.flush(report, json{{"n", n}, {"t", t}, {"trials", trials}, {"seed", seed}});
  report.add("pipeline.maximality_after_closures", json{{"n", n}, {"t", t}, {"trials", trials}, {"seed", seed}},
             CheckOutcome::pass(std::to_string(output_maximal) + " outputs maximal, " +
                                std::to_string(output_resaturated) + " re-saturated before the lemma checks"));
  return report;
}

VerificationReport verify_all(int n_max, int trials, std::uint64_t seed, const Limits& limits) {
  if (n_max < 1) throw std::invalid_argument("n-max must be positive");
  VerificationReport report;
  report.suite = "all";

  for (int n = 1; n <= n_max; ++n) {
    Tally tally;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const Subset e(n, mask);
      const std::uint64_t formula = d_size_formula(n, e.size(), e.max());
      const std::uint64_t actual = d_set(e).size();
      tally.add("gensets.d_size_formula",
                expect(actual == formula, "|D(E)| against the inclusion-exclusion formula",
                       json{{"E", to_json(e)}, {"n", n}, {"enumerated", actual}, {"formula", formula}}));
      tally.add("gensets.d_prime_bound", d_prime_bound_check(e));
    }
    tally.flush(report, json{{"n", n}, {"sets", "all nonempty E within [n]"}});
  }

  {
    bool all_hold = true;
    json bad = nullptr;
    for (int t = 1; t <= 50 && all_hold; ++t)
      for (int n = 2 * t + 1; n <= 2 * t + 40; ++n) {
        const QuadraticReport q = quad_inequality_check(n, t);
        if (!q.all_even_hold) {
          all_hold = false;
          bad = {{"n", n}, {"t", t}};
          break;
        }
      }
    report.add("extremal.quadratic_even_delta", json{{"t_max", 50}, {"n_span", 40}},
               expect(all_hold, "quadratic <= 0 for every even delta in [2, n-t]", bad));
    const long long v = quadratic_value(4, 2, 2);
    report.add("extremal.quadratic_fails_below_range", json{{"n", 4}, {"t", 2}, {"delta", 2}},
               expect(v > 0, "value " + std::to_string(v)));
  }

  for (int n = 1; n <= std::min(n_max, limits.search_cap); ++n)
    for (int t = 1; 2 * t + 1 <= n; ++t) report.append(verify_theorem_14(n, t, [&] {
      SearchOptions o;
      o.limits = limits;
      return o;
    }()));

  for (int t = 1; t <= 5; ++t)
    for (int n = t + 3; n < 2 * t + 1 && n <= 8; ++n) report.append(verify_counterexample_regime(n, t, limits));

  for (int n = 6; n <= 7; ++n) {
    std::vector<Subset> fours;
    for (std::uint64_t mask = 0; mask < 32; ++mask)
      if (std::popcount(mask) == 4) fours.emplace_back(n, mask);
    const SurgeryReport s = lemma31_surgery(SetSystem(n, fours), 3, 4, limits);
    const json params{{"n", n}, {"t", 3}, {"g", "all 4-subsets of [5]"}, {"size_class", 4}};
    report.add("gensets.surgery_intersecting", params,
               expect(s.f_prime_t_intersecting, "surgered system stays t-intersecting", to_json(s.f_prime)));
    report.add("gensets.surgery_pigeonhole", params, expect(s.pigeonhole_bound_holds, "|T'| lower bound"));
  }

  if (n_max <= limits.enumeration_cap)
    for (int t = 1; t + 1 < n_max; ++t) report.append(pipeline_roundtrip(n_max, t, trials, seed, limits));
  return report;
}

}  // namespace tcyc
