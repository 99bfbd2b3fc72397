#ifndef TCYC_EXTREMAL_HPP
#define TCYC_EXTREMAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcyc/family.hpp"

namespace tcyc {

/// All permutations fixing every listed point; (n - |points|)! members.
PermFamily stabilizer_family(const std::vector<int>& points, int n);

/// F_i = { sigma : |fix(sigma) cap [t+2i]| >= t+i }, by scanning S_n.
/// Requires t + 2i <= n and n within the enumeration cap.
PermFamily f_i_family(int n, int t, int i, const Limits& limits = {});

/// |F_i| by counting fix patterns on [t+2i] (no materialization), n <= 20.
std::uint64_t f_i_count(int n, int t, int i);

/// (t-2)! (t^2 - 3), the size of F_1 at n = 2t. Requires t >= 2.
std::uint64_t f1_size_closed_form(int t);

struct FamilySize {
  std::uint64_t size = 0;
  /// "enumeration", "counting", "closed-form" joined with '+' when several agree.
  std::string method;
};

struct ExtremalComparison {
  int n = 0;
  int t = 0;
  std::map<std::string, FamilySize> sizes;  // "F0", "F1", "F2", ...
  /// Facts such as "F1 > F0", one per compared family.
  std::vector<std::string> verdicts;
  std::string regime;
};

/// Sizes of F0 and the requested F_i (default {1}), each from every route
/// available within the cap; throws std::logic_error if routes disagree.
ExtremalComparison compare_extremal(int n, int t, const std::vector<int>& indices = {1},
                                    const Limits& limits = {});

struct QuadraticRow {
  int delta = 0;
  long long value = 0;  // delta^2 + delta(2 + 2t - 2n) + 4t - 4
  bool holds = false;   // value <= 0
};

struct QuadraticReport {
  int n = 0;
  int t = 0;
  std::vector<QuadraticRow> even_rows;  // asserted
  std::vector<QuadraticRow> odd_rows;   // informational
  bool all_even_hold = true;
  bool expected_to_hold = false;  // n >= 2t+1
  bool consistent() const { return !expected_to_hold || all_even_hold; }
};

long long quadratic_value(int n, int t, int delta);

/// Evaluates the quadratic for every delta in [2, n-t].
QuadraticReport quad_inequality_check(int n, int t);

}  // namespace tcyc

#endif  // TCYC_EXTREMAL_HPP
