#ifndef TCYC_GENSETS_HPP
#define TCYC_GENSETS_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "tcyc/check.hpp"
#include "tcyc/family.hpp"
#include "tcyc/subset.hpp"

namespace tcyc {

// --- up-permutations and generating sets -----------------------------------

/// All sigma with B contained in fix(sigma); (n - |B|)! members.
PermFamily up_perm(const Subset& b);

/// Union of up_perm over the members of the system.
PermFamily up_perm_system(const SetSystem& system);

/// |up_perm_system(system)| computed without materializing, by inclusion-exclusion
/// over the union of members. Exponential in |system|; intended for small systems.
std::uint64_t up_perm_system_size(const SetSystem& system);

/// No member of size n-1 and up_perm_system(g) = F.
bool is_generating_set(const SetSystem& g, const PermFamily& family);

SetSystem fix_system(const PermFamily& family);

// --- left shifting ------------------------------------------------------------

/// All A with |A| = |B| and a_k <= b_k componentwise (sorted); includes B.
SetSystem left_shift_set(const Subset& b);
SetSystem left_shift_system(const SetSystem& system);

/// Members with no proper subset in the system.
SetSystem minimal_elements(const SetSystem& system);

/// L*: minimal elements of the left-shift closure.
SetSystem lstar(const SetSystem& system);

/// Largest element; throws on the empty set.
int s_plus(const Subset& b);
/// Maximum of s_plus over members; throws on an empty system or an empty member.
int s_plus_system(const SetSystem& system);

// --- D(E) and D'(E) -------------------------------------------------------------

/// Number of sigma in S_n that fix a prescribed k-subset W0 of a prescribed
/// s-set W and no point of W \ W0 (inclusion-exclusion, exact). 0 <= k <= s <= n <= 20.
std::uint64_t count_fixing_exactly(int n, int k, int s);

/// |D(E)| for |E| = k, s+(E) = s. Requires 1 <= k <= s <= n <= 20.
std::uint64_t d_size_formula(int n, int k, int s);

/// D(E) = { sigma : fix(sigma) cap [s+(E)] = E }, enumerated.
PermFamily d_set(const Subset& e);

/// D'(E) = { sigma : fix(sigma) cap [s+(E)-1] = E \ {s+(E)} }, enumerated.
PermFamily d_prime_set(const Subset& e);

/// |D(E)| by enumeration within the enumeration cap, by formula beyond it.
std::uint64_t d_count(const Subset& e, const Limits& limits = {});

// --- certificates and lemma checks ----------------------------------------------

struct GeneratingSetCertificate {
  SetSystem system;
  std::size_t family_size = 0;
  /// -1 when undefined (empty system or empty member).
  int s_plus = -1;
  bool is_left_compressed = false;
  bool is_inclusion_minimal = false;
  bool is_generating_set = false;
  bool has_forbidden_size = false;  // some member of size n-1
};

/// Certificate for an arbitrary set system against a family.
GeneratingSetCertificate certify(const SetSystem& system, const PermFamily& family);

/// Certificate for L*(L(Fix(F))), the operational representative of G*(F).
GeneratingSetCertificate derive_certificate(const PermFamily& family);

/// Every shift of a member contains some member.
bool is_left_compressed_system(const SetSystem& system);

/// F maximal and fixed in I(n,t) => Fix(F) is a generating set of F.
CheckOutcome existence_check(const PermFamily& family, int t, const Limits& limits = {});

/// F in I(n,t), n > t+1, g in G(F) => g is t-intersecting and s+(g) >= t.
CheckOutcome generating_set_intersection_check(const SetSystem& g, const PermFamily& family, int t);

/// F maximal, fixed, compressed, g in G(F) => L*(g) in G(F), s+(L*(g)) <= s+(g),
/// and every shift of a member of g contains a member of L*(g).
CheckOutcome lstar_properties_check(const SetSystem& g, const PermFamily& family, int t, const Limits& limits = {});

/// F maximal, fixed, compressed, g in G*(F) => F is the disjoint union of D(E), E in g.
CheckOutcome disjoint_union_check(const PermFamily& family, const SetSystem& g, int t, const Limits& limits = {});

/// g in G*-form (L*(g) = g), n > t+1: distinct E1, E2 with some i < j, i outside
/// E1 u E2, j inside E1 n E2 must meet in >= t+1 points.
CheckOutcome pair_t_plus_one_check(const SetSystem& g, int t);

/// |D'(E)| >= (n-|E|+1)|D(E)|, strict exactly when s+(E) > |E|, except that
/// |E| = n-2 with s+(E) = n gives equality.
CheckOutcome d_prime_bound_check(const Subset& e);

// --- surgery on generating sets ---------------------------------------------------

struct SizeClassPartition {
  int t = 0;
  int delta = 0;  // s+(g) - t
  SetSystem top;   // members with s+ = t + delta
  SetSystem rest;
  /// Members of `top` by cardinality.
  std::map<int, SetSystem> classes;
  /// Every nonempty class index lies strictly between t and t + delta.
  bool classes_within_bounds = true;
};

/// Throws when delta <= 0 (nothing to partition).
SizeClassPartition partition_g0_g1(const SetSystem& g, int t);

struct SurgeryReport {
  enum class Case { paired_classes, middle_class };

  int n = 0;
  int t = 0;
  int delta = 0;
  int size_class = 0;
  Case kind = Case::paired_classes;
  std::uint64_t original_size = 0;  // |U_p(g)|

  // Paired classes: i != 2t + delta - i.
  int partner_class = 0;
  SetSystem f1, f2;
  std::uint64_t f1_size = 0, f2_size = 0;
  bool f1_t_intersecting = false, f2_t_intersecting = false;

  // Middle class: i = t + delta/2.
  int pivot = 0;
  std::size_t class_size = 0;
  SetSystem t_prime;
  SetSystem f_prime;
  SetSystem f_prime_minimal;
  std::uint64_t f_prime_size = 0;
  bool f_prime_t_intersecting = false;
  bool pigeonhole_bound_holds = false;

  std::uint64_t best_size = 0;
  bool strict_gain = false;
};

/// Builds the larger candidate families from a generating set whose s+ exceeds t.
SurgeryReport lemma31_surgery(const SetSystem& g, int t, int size_class, const Limits& limits = {});

}  // namespace tcyc

#endif  // TCYC_GENSETS_HPP
