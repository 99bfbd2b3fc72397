#include "tcyc/extremal.hpp"

#include <algorithm>
#include <stdexcept>

#include "tcyc/gensets.hpp"

namespace tcyc {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

void check_fi_params(int n, int t, int i) {
  if (t < 1 || i < 0) throw std::invalid_argument("F_i requires t >= 1 and i >= 0");
  if (t + 2 * i > n) throw std::invalid_argument("F_i requires t + 2i <= n");
}

}  // namespace

PermFamily stabilizer_family(const std::vector<int>& points, int n) {
  if (static_cast<int>(points.size()) > n) throw std::invalid_argument("more stabilized points than n");
  Subset fixed(n, std::uint64_t{0});
  for (int x : points) {
    if (x < 1 || x > n) throw std::out_of_range("stabilized point " + std::to_string(x) + " outside [n]");
    if (fixed.contains(x)) throw std::invalid_argument("stabilized point " + std::to_string(x) + " repeated");
    fixed = fixed.with(x);
  }
  return up_perm(fixed);
}

PermFamily f_i_family(int n, int t, int i, const Limits& limits) {
  check_fi_params(n, t, i);
  if (n > limits.enumeration_cap)
    throw std::length_error("F_i at n = " + std::to_string(n) + " exceeds the enumeration cap");
  const std::uint64_t window = (std::uint64_t{1} << (t + 2 * i)) - 1;
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (std::popcount(p.fix_set().mask() & window) >= t + i) out.push_back(p);
  });
  return PermFamily(n, std::move(out));
}

std::uint64_t f_i_count(int n, int t, int i) {
  check_fi_params(n, t, i);
  const int window = t + 2 * i;
  std::uint64_t total = 0;
  // Exactly k of the window fixed: choose which, then exclude fixing the rest of the window.
  for (int k = t + i; k <= window; ++k) total += binomial(window, k) * count_fixing_exactly(n, k, window);
  return total;
}

std::uint64_t f1_size_closed_form(int t) {
  if (t < 2) throw std::invalid_argument("closed form requires t >= 2");
  return factorial(t - 2) * static_cast<std::uint64_t>(t * t - 3);
}

ExtremalComparison compare_extremal(int n, int t, const std::vector<int>& indices, const Limits& limits) {
  if (t < 1 || t > n) throw std::invalid_argument("compare_extremal requires 1 <= t <= n");
  ExtremalComparison cmp;
  cmp.n = n;
  cmp.t = t;
  if (n >= 2 * t + 1)
    cmp.regime = "n >= 2t+1";
  else if (n >= t + 3)
    cmp.regime = "t+3 <= n < 2t+1";
  else
    cmp.regime = "n < t+3";

  auto record = [&](const std::string& name, int i) {
    std::vector<std::pair<std::string, std::uint64_t>> routes;
    routes.emplace_back("counting", f_i_count(n, t, i));
    if (n <= limits.enumeration_cap) routes.emplace_back("enumeration", f_i_family(n, t, i, limits).size());
    if (i == 0) routes.emplace_back("closed-form", factorial(n - t));
    if (i == 1 && n == 2 * t && t >= 2) routes.emplace_back("closed-form", f1_size_closed_form(t));
    FamilySize fs{routes.front().second, {}};
    for (const auto& [method, value] : routes) {
      if (value != fs.size)
        throw std::logic_error(name + " size routes disagree: " + method + " gives " + std::to_string(value) +
                               ", counting gives " + std::to_string(fs.size));
      fs.method += fs.method.empty() ? method : "+" + method;
    }
    cmp.sizes[name] = fs;
  };

  record("F0", 0);
  for (int i : indices) {
    if (i == 0) continue;
    if (t + 2 * i > n) throw std::invalid_argument("F" + std::to_string(i) + " requires t + 2i <= n");
    const std::string name = "F" + std::to_string(i);
    record(name, i);
    const auto a = cmp.sizes[name].size, b = cmp.sizes["F0"].size;
    cmp.verdicts.push_back(name + (a > b ? " > " : a == b ? " = " : " < ") + "F0");
  }
  return cmp;
}

long long quadratic_value(int n, int t, int delta) {
  const long long d = delta;
  return d * d + d * (2 + 2LL * t - 2LL * n) + 4LL * t - 4;
}

QuadraticReport quad_inequality_check(int n, int t) {
  if (n < 1 || t < 1) throw std::invalid_argument("quad_inequality_check requires n, t >= 1");
  QuadraticReport r;
  r.n = n;
  r.t = t;
  r.expected_to_hold = n >= 2 * t + 1;
  for (int delta = 2; delta <= n - t; ++delta) {
    QuadraticRow row{delta, quadratic_value(n, t, delta), false};
    row.holds = row.value <= 0;
    if (delta % 2 == 0) {
      r.all_even_hold = r.all_even_hold && row.holds;
      r.even_rows.push_back(row);
    } else {
      r.odd_rows.push_back(row);
    }
  }
  return r;
}

}  // namespace tcyc
