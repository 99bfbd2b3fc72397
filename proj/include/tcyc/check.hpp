#ifndef TCYC_CHECK_HPP
#define TCYC_CHECK_HPP

#include <string>
#include <string_view>

#include <json.hpp>

namespace tcyc {

enum class CheckStatus { pass, fail, hypothesis_not_met };

std::string_view to_string(CheckStatus status);

/// Outcome of a hypothesis-carrying verifier. A failure carries a witness
/// that can be replayed through the JSON interfaces.
struct CheckOutcome {
  CheckStatus status = CheckStatus::pass;
  std::string detail;
  nlohmann::json witness;

  bool passed() const { return status == CheckStatus::pass; }
  bool failed() const { return status == CheckStatus::fail; }

  static CheckOutcome pass(std::string detail = {}) { return {CheckStatus::pass, std::move(detail), nullptr}; }
  static CheckOutcome fail(std::string detail, nlohmann::json witness = nullptr) {
    return {CheckStatus::fail, std::move(detail), std::move(witness)};
  }
  static CheckOutcome hypothesis_not_met(std::string detail) {
    return {CheckStatus::hypothesis_not_met, std::move(detail), nullptr};
  }
};

}  // namespace tcyc

#endif  // TCYC_CHECK_HPP
