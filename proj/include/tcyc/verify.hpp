#ifndef TCYC_VERIFY_HPP
#define TCYC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcyc/check.hpp"
#include "tcyc/search.hpp"

namespace tcyc {

struct CheckRecord {
  std::string check;
  nlohmann::json params;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  nlohmann::json witness;  // null unless the check failed
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  void add(std::string check, nlohmann::json params, const CheckOutcome& outcome);
  void append(const VerificationReport& other);
  /// No record has status fail (hypothesis-not-met is not a failure).
  bool all_passed() const;
  std::size_t count(CheckStatus status) const;
  nlohmann::json to_json() const;
};

/// Max family size equals (n-t)! and every maximum family is a stabilizer of t points.
/// Reports hypothesis-not-met below n = 2t+1.
VerificationReport verify_theorem_14(int n, int t, const SearchOptions& options = {});

/// |F1| >= |F0| for t+3 <= n < 2t+1, strict unless t = 3.
VerificationReport verify_counterexample_regime(int n, int t, const Limits& limits = {});

/// Random seed family, maximalize, fix closure, compression closure, then every
/// lemma check on the result. One record per check, aggregated over trials.
VerificationReport pipeline_roundtrip(int n, int t, int trials, std::uint64_t seed, const Limits& limits = {});

/// Every check at tiny scale: D-set formula and D' bound for all E within [n_max],
/// the quadratic table, small search instances, the counterexample regime and the pipeline.
VerificationReport verify_all(int n_max, int trials, std::uint64_t seed, const Limits& limits = {});

}  // namespace tcyc

#endif  // TCYC_VERIFY_HPP
