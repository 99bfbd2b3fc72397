#ifndef TCYC_TRANSFORM_HPP
#define TCYC_TRANSFORM_HPP

#include <vector>

#include "tcyc/check.hpp"
#include "tcyc/family.hpp"

namespace tcyc {

/// ij-fixing. If sigma(i) = j the result fixes i and sends sigma^{-1}(i) to j;
/// otherwise sigma is returned unchanged. Requires i != j in [n].
Permutation ij_fix_perm(const Permutation& sigma, int i, int j);

/// (i,j)-compression, i < j. If sigma moves i and fixes j the result fixes i,
/// sends j to sigma(i) and sigma^{-1}(i) to j; otherwise sigma is unchanged.
Permutation compress_perm(const Permutation& sigma, int i, int j);

/// Family-level operators: each member is rewritten only when its rewrite is
/// not already a member of the input family.
PermFamily ij_fix_family(const PermFamily& family, int i, int j);
PermFamily compress_family(const PermFamily& family, int i, int j);

/// Termination evidence for a closure. Pairs are swept in lexicographic order
/// and sweeps repeat until one pass changes nothing.
struct ClosureTrace {
  int passes = 0;
  long long applications = 0;
  /// Rewrites performed in each pass; the last entry is always 0.
  std::vector<long long> applications_per_pass;
  /// Closure-specific potential: total fixed-point count for fixing, sum of
  /// fixed points for compression.
  long long potential_before = 0;
  long long potential_after = 0;
  /// Potential after each pass.
  std::vector<long long> potential_per_pass;
};

struct ClosureResult {
  PermFamily family;
  ClosureTrace trace;
};

/// Repeated ij-fixing over all ordered pairs i != j until the family is fixed.
ClosureResult fix_closure(const PermFamily& family);

/// Repeated (i,j)-compression over all i < j until the family is compressed.
ClosureResult compress_closure(const PermFamily& family);

bool is_fixed_family(const PermFamily& family);
bool is_compressed_family(const PermFamily& family);

/// If `transformed` is the stabilizer of t points then `original` must be too.
/// Hypotheses: original in I(n,t), n > t+1, |original| = |transformed|.
CheckOutcome stabilizer_pullback_check(const PermFamily& original, const PermFamily& transformed, int t);

/// F fixed and in I(n,t) implies C_ij(F) in I(n,t).
CheckOutcome compression_preserves_intersection(const PermFamily& family, int t, int i, int j);

/// F maximal, fixed and in I(n,t) implies C_ij(F) is fixed.
CheckOutcome compression_preserves_fixedness(const PermFamily& family, int t, int i, int j, const Limits& limits = {});

}  // namespace tcyc

#endif  // TCYC_TRANSFORM_HPP
