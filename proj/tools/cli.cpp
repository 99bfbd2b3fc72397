#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tcyc/extremal.hpp"
#include "tcyc/gensets.hpp"
#include "tcyc/intersect.hpp"
#include "tcyc/io.hpp"
#include "tcyc/search.hpp"
#include "tcyc/transform.hpp"
#include "tcyc/verify.hpp"

namespace tcyc::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << report.dump(2) << '\n';
  else
    write_json_file(path, report);
}

json trace_json(const ClosureTrace& tr) {
  return {{"passes", tr.passes},
          {"applications", tr.applications},
          {"applications_per_pass", tr.applications_per_pass},
          {"potential_before", tr.potential_before},
          {"potential_after", tr.potential_after},
          {"potential_per_pass", tr.potential_per_pass}};
}

json record_json(const std::string& check, const CheckOutcome& o) {
  json r{{"check", check}, {"status", to_string(o.status)}};
  if (!o.detail.empty()) r["detail"] = o.detail;
  if (o.failed() && !o.witness.is_null()) r["witness"] = o.witness;
  return r;
}

json certificate_json(const GeneratingSetCertificate& c) {
  return {{"system", to_json(c.system)},
          {"family_size", c.family_size},
          {"s_plus", c.s_plus},
          {"is_left_compressed", c.is_left_compressed},
          {"is_inclusion_minimal", c.is_inclusion_minimal},
          {"is_generating_set", c.is_generating_set},
          {"has_forbidden_size", c.has_forbidden_size}};
}

json search_json(const CliqueSearchResult& r) {
  json j{{"n", r.n},
         {"t", r.t},
         {"mode", r.mode == SearchMode::enumerate_all ? "enumerate-all" : "size-only"},
         {"max_size", r.max_size},
         {"complete", r.complete},
         {"witnesses_valid", r.witnesses_valid},
         {"witness_count", r.witness_count},
         {"witnesses_truncated", r.witnesses_truncated}};
  j["witnesses"] = json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(to_json(w));
  if (!r.orbits.empty()) {
    j["orbits"] = json::array();
    for (const auto& o : r.orbits)
      j["orbits"].push_back({{"representative", to_json(o.representative)}, {"members", o.members}});
  }
  j["stats"] = {{"nodes", r.stats.nodes}, {"bound_cutoffs", r.stats.bound_cutoffs}, {"wall_seconds", r.stats.wall_seconds}};
  return j;
}

int run_transform(const std::string& in, const std::string& pipeline, int t, bool have_t, bool trace,
                  const std::string& out_path, const Limits& limits, std::ostream& out) {
  PermFamily family = family_from_json(read_json_file(in));
  const std::vector<std::string> steps = split_list(pipeline);
  if (steps.empty()) throw UsageError("--pipeline is empty");
  for (const auto& s : steps)
    if (s != "fix-closure" && s != "compress-closure" && s != "maximalize")
      throw UsageError("unknown pipeline step '" + s + "'");
  if (!have_t && std::find(steps.begin(), steps.end(), "maximalize") != steps.end())
    throw UsageError("maximalize needs --t");

  json report{{"input_size", family.size()}, {"steps", json::array()}};
  bool ok = true;
  const bool input_intersecting = have_t && is_family_t_cycle_intersecting(family, t);
  for (const auto& s : steps) {
    json step{{"step", s}, {"size_before", family.size()}};
    if (s == "maximalize") {
      family = maximalize(family, t, limits);
    } else {
      ClosureResult r = s == "fix-closure" ? fix_closure(family) : compress_closure(family);
      if (trace) step["trace"] = trace_json(r.trace);
      family = std::move(r.family);
    }
    step["size_after"] = family.size();
    report["steps"].push_back(std::move(step));
  }
  report["is_fixed"] = is_fixed_family(family);
  report["is_compressed"] = is_compressed_family(family);
  if (have_t) {
    report["t"] = t;
    report["input_t_intersecting"] = input_intersecting;
    report["output_t_intersecting"] = is_family_t_cycle_intersecting(family, t);
    if (input_intersecting && !report["output_t_intersecting"].get<bool>()) ok = false;
  }
  report["family"] = to_json(family);
  emit(report, out_path, out);
  return ok ? kOk : kCheckFailed;
}

int run_gensets(const std::string& in, bool derive, const std::string& checks, int t, bool have_t,
                const std::string& out_path, const Limits& limits, std::ostream& out) {
  const PermFamily family = family_from_json(read_json_file(in));
  if (!have_t) t = intersection_strength(family);
  json report{{"n", family.degree()}, {"t", t}, {"t_inferred", !have_t}, {"family_size", family.size()}};
  const SetSystem g = fix_system(family);
  const SetSystem star = lstar(g);
  if (derive) report["certificate"] = certificate_json(derive_certificate(family));

  static const std::vector<std::string> known{"existence",   "fix-intersecting", "lstar-intersecting",
                                              "lstar-properties", "disjoint-union", "pair-t-plus-one",
                                              "d-prime-bound"};
  std::vector<std::string> wanted = checks == "all" ? known : split_list(checks);
  bool ok = true;
  report["checks"] = json::array();
  for (const auto& c : wanted) {
    std::vector<std::pair<std::string, CheckOutcome>> results;
    if (c == "existence")
      results.emplace_back(c, existence_check(family, t, limits));
    else if (c == "fix-intersecting")
      results.emplace_back(c, generating_set_intersection_check(g, family, t));
    else if (c == "lstar-intersecting")
      results.emplace_back(c, generating_set_intersection_check(star, family, t));
    else if (c == "lstar-properties")
      results.emplace_back(c, lstar_properties_check(g, family, t, limits));
    else if (c == "disjoint-union")
      results.emplace_back(c, disjoint_union_check(family, star, t, limits));
    else if (c == "pair-t-plus-one")
      results.emplace_back(c, pair_t_plus_one_check(star, t));
    else if (c == "d-prime-bound") {
      for (const auto& e : star)
        if (!e.empty()) results.emplace_back(c + " " + e.to_string(), d_prime_bound_check(e));
    } else
      throw UsageError("unknown check '" + c + "'");
    for (const auto& [name, o] : results) {
      ok = ok && !o.failed();
      report["checks"].push_back(record_json(name, o));
    }
  }
  report["all_passed"] = ok;
  emit(report, out_path, out);
  return ok ? kOk : kCheckFailed;
}

int run_extremal(int n, int t, const std::string& families, bool compare, const std::string& out_path,
                 const Limits& limits, std::ostream& out) {
  std::vector<int> indices;
  for (const auto& f : split_list(families)) {
    if (f.size() < 2 || f[0] != 'F') throw UsageError("family names look like F0, F1, ...: '" + f + "'");
    try {
      indices.push_back(std::stoi(f.substr(1)));
    } catch (const std::exception&) {
      throw UsageError("bad family name '" + f + "'");
    }
  }
  const ExtremalComparison cmp = compare_extremal(n, t, indices, limits);
  json report{{"n", n}, {"t", t}, {"regime", cmp.regime}, {"sizes", json::object()}};
  for (const auto& [name, fs] : cmp.sizes) {
    const bool requested = name == "F0" ? std::find(indices.begin(), indices.end(), 0) != indices.end() || compare
                                        : true;
    if (requested) report["sizes"][name] = {{"size", fs.size}, {"method", fs.method}};
  }
  if (compare) report["verdicts"] = cmp.verdicts;
  emit(report, out_path, out);
  return kOk;
}

int run_quad(int t_max, int n_span, const std::string& out_path, std::ostream& out) {
  if (t_max < 1 || n_span < 1) throw UsageError("--t-max and --n-span must be positive");
  json violations = json::array();
  long long odd_failures = 0, rows = 0;
  for (int t = 1; t <= t_max; ++t)
    for (int n = 2 * t + 1; n <= 2 * t + n_span; ++n) {
      const QuadraticReport q = quad_inequality_check(n, t);
      rows += static_cast<long long>(q.even_rows.size());
      for (const auto& r : q.even_rows)
        if (!r.holds) violations.push_back({{"n", n}, {"t", t}, {"delta", r.delta}, {"value", r.value}});
      for (const auto& r : q.odd_rows) odd_failures += !r.holds;
    }
  json report{{"t_max", t_max},
              {"n_range", "[2t+1, 2t+" + std::to_string(n_span) + "]"},
              {"even_rows_checked", rows},
              {"violations", violations},
              {"odd_delta_failures", odd_failures},
              {"below_range_example", {{"n", 4}, {"t", 2}, {"delta", 2}, {"value", quadratic_value(4, 2, 2)}}},
              {"all_hold", violations.empty()}};
  emit(report, out_path, out);
  return violations.empty() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"t-cycle-intersecting permutation families"};
  app.require_subcommand(1);

  Limits limits = Limits::from_environment();
  app.add_option("--enumeration-cap", limits.enumeration_cap, "Largest n for which S_n is enumerated")
      ->check(CLI::Range(1, 20));
  app.add_option("--search-cap", limits.search_cap, "Largest n searched without a time budget")
      ->check(CLI::Range(1, 20));

  std::string out_path;
  int n = 0, t = 0;

  auto* transform = app.add_subcommand("transform", "Apply fixing/compression closures to a family");
  std::string in, pipeline = "fix-closure,compress-closure";
  bool trace = false;
  transform->add_option("--in", in, "Family JSON")->required();
  transform->add_option("--pipeline", pipeline, "Comma list of fix-closure, compress-closure, maximalize");
  auto* transform_t = transform->add_option("--t", t, "Intersection parameter");
  transform->add_flag("--trace", trace, "Include per-pass closure traces");
  transform->add_option("--out", out_path, "Report path");

  auto* gensets = app.add_subcommand("gensets", "Generating sets and lemma checks for a family");
  bool derive = false;
  std::string checks = "all";
  gensets->add_option("--family", in, "Family JSON")->required();
  gensets->add_flag("--derive", derive, "Derive L*(L(Fix F)) and its certificate");
  gensets->add_option("--check", checks, "all, or a comma list of checks");
  auto* gensets_t = gensets->add_option("--t", t, "Intersection parameter (default: inferred)");
  gensets->add_option("--out", out_path, "Report path");

  auto* extremal = app.add_subcommand("extremal", "Sizes of the F_i families");
  std::string families = "F0,F1";
  bool compare = false;
  extremal->add_option("--n", n, "Degree");
  extremal->add_option("--t", t, "Intersection parameter");
  extremal->add_option("--families", families, "Comma list such as F0,F1");
  extremal->add_flag("--compare", compare, "Compare each F_i against F0");
  extremal->add_option("--out", out_path, "Report path");
  auto* quad = extremal->add_subcommand("quad", "Tabulate the quadratic inequality");
  int t_max = 50, n_span = 40;
  quad->add_option("--t-max", t_max, "Largest t");
  quad->add_option("--n-span", n_span, "n runs over [2t+1, 2t+span]");
  quad->add_option("--out", out_path, "Report path");

  auto* search = app.add_subcommand("search", "Maximum t-cycle-intersecting families by clique search");
  SearchOptions sopts;
  bool enumerate_all = false;
  double budget = 0;
  std::string dimacs;
  search->add_option("--n", n, "Degree")->required();
  search->add_option("--t", t, "Intersection parameter")->required();
  search->add_flag("--enumerate-all", enumerate_all, "List every maximum family");
  search->add_option("--workers", sopts.workers, "Threads")->check(CLI::Range(1, 256));
  auto* search_budget = search->add_option("--time-budget", budget, "Seconds")->check(CLI::PositiveNumber);
  search->add_option("--max-witnesses", sopts.max_witnesses, "Keep at most this many witnesses (0 = all)");
  search->add_flag("--symmetry", sopts.symmetry_reduce, "Group witnesses by conjugacy class");
  search->add_option("--dimacs", dimacs, "Also write the intersection graph in DIMACS format");
  search->add_option("--out", out_path, "Report path");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int trials = 100, n_max = 5;
  std::uint64_t seed = 0;
  verify->add_option("--suite", suite, "theorem14 | counterexample | pipeline | all")
      ->required()
      ->check(CLI::IsMember({"theorem14", "counterexample", "pipeline", "all"}));
  auto* verify_n = verify->add_option("--n", n, "Degree");
  auto* verify_t = verify->add_option("--t", t, "Intersection parameter");
  verify->add_option("--trials", trials, "Pipeline trials")->check(CLI::NonNegativeNumber);
  auto* verify_seed = verify->add_option("--seed", seed, "Seed for randomized suites");
  verify->add_option("--n-max", n_max, "Largest n for --suite all")->check(CLI::Range(1, 7));
  verify->add_option("--workers", sopts.workers, "Threads for the search")->check(CLI::Range(1, 256));
  verify->add_option("--out", out_path, "Report path");

  std::vector<std::string> storage{"tcyc"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (transform->parsed())
      return run_transform(in, pipeline, t, bool(*transform_t), trace, out_path, limits, out);
    if (gensets->parsed()) return run_gensets(in, derive, checks, t, bool(*gensets_t), out_path, limits, out);
    if (quad->parsed()) return run_quad(t_max, n_span, out_path, out);
    if (extremal->parsed()) {
      if (n < 1 || t < 1) throw UsageError("extremal needs --n and --t");
      return run_extremal(n, t, families, compare, out_path, limits, out);
    }
    if (search->parsed()) {
      sopts.mode = enumerate_all ? SearchMode::enumerate_all : SearchMode::size_only;
      if (*search_budget) sopts.time_budget = budget;
      sopts.limits = limits;
      if (!dimacs.empty()) {
        std::ofstream f(dimacs);
        if (!f) throw std::runtime_error("cannot write " + dimacs);
        IntersectionGraph::build(n, t, limits, sopts.workers).write_dimacs(f);
      }
      const CliqueSearchResult r = max_family_search(n, t, sopts);
      emit(search_json(r), out_path, out);
      return r.complete && r.witnesses_valid ? kOk : kCheckFailed;
    }
    if (verify->parsed()) {
      const bool randomized = suite == "pipeline" || suite == "all";
      if (randomized && !*verify_seed) throw UsageError("--suite " + suite + " requires --seed");
      if (suite != "all" && (!*verify_n || !*verify_t)) throw UsageError("--suite " + suite + " requires --n and --t");
      sopts.limits = limits;
      VerificationReport report;
      if (suite == "theorem14")
        report = verify_theorem_14(n, t, sopts);
      else if (suite == "counterexample")
        report = verify_counterexample_regime(n, t, limits);
      else if (suite == "pipeline")
        report = pipeline_roundtrip(n, t, trials, seed, limits);
      else
        report = verify_all(n_max, trials, seed, limits);
      emit(report.to_json(), out_path, out);
      return report.all_passed() ? kOk : kCheckFailed;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::logic_error& e) {
    // invalid_argument, out_of_range, length_error, domain_error: bad parameters
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace tcyc::cli
