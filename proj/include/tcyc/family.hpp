#ifndef TCYC_FAMILY_HPP
#define TCYC_FAMILY_HPP

#include <cstddef>
#include <vector>

#include "tcyc/perm.hpp"

namespace tcyc {

/// Degree bounds for operations that walk or materialize S_n.
struct Limits {
  /// Largest n for which all of S_n may be scanned or materialized.
  int enumeration_cap = 7;
  /// Largest n for which the clique search runs without a time budget.
  int search_cap = 6;

  /// Defaults overridden by TCYC_ENUMERATION_CAP / TCYC_SEARCH_CAP when set.
  static Limits from_environment();
};

/// Guard for operations that materialize a family directly (without scanning S_n).
inline constexpr std::size_t kMaxMaterializedFamily = 5'000'000;

/// A set of permutations of [n], deduplicated and kept in lexicographic one-line order.
class PermFamily {
public:
  explicit PermFamily(int n) : n_(n) {}
  PermFamily(int n, std::vector<Permutation> members);

  int degree() const { return n_; }
  const std::vector<Permutation>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Permutation& p) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const PermFamily&, const PermFamily&) = default;

private:
  int n_;
  std::vector<Permutation> members_;
};

/// Sum over members of |fix(sigma)|.
long long total_fixed_points(const PermFamily& family);

/// Sum over members of the sum of their fixed points.
long long fixed_point_weight(const PermFamily& family);

}  // namespace tcyc

#endif  // TCYC_FAMILY_HPP
