#ifndef TCYC_INTERSECT_HPP
#define TCYC_INTERSECT_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "tcyc/bitset.hpp"
#include "tcyc/family.hpp"

namespace tcyc {

/// Canonical cycles (smallest element first) present in both decompositions,
/// ordered by smallest element.
std::vector<Permutation::Cycle> common_cycles(const Permutation& sigma, const Permutation& pi);

int common_cycle_count(const Permutation& sigma, const Permutation& pi);

bool is_t_cycle_intersecting_pair(const Permutation& sigma, const Permutation& pi, int t);

/// Pointwise: sigma and pi agree on at least t points.
bool is_t_intersecting_pair(const Permutation& sigma, const Permutation& pi, int t);

/// First pair (in member order, self-pairs included) sharing fewer than t cycles, if any.
std::optional<std::pair<Permutation, Permutation>> find_non_intersecting_pair(const PermFamily& family, int t);

/// Each member is paired with itself too, so every member needs at least t cycles.
bool is_family_t_cycle_intersecting(const PermFamily& family, int t);

/// Largest t for which the family is t-cycle-intersecting (n for the empty family).
int intersection_strength(const PermFamily& family);

/// The t points F is the full stabilizer of, if F is the stabilizer of some t-set.
std::optional<Subset> stabilized_points(const PermFamily& family, int t);

/// Vertices are S_n in rank order; u ~ v iff u != v share at least t cycles.
class IntersectionGraph {
public:
  static IntersectionGraph build(int n, int t, const Limits& limits = {}, int workers = 1);

  int degree_n() const { return n_; }
  int t() const { return t_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Permutation& vertex(std::size_t rank) const { return vertices_[rank]; }
  const std::vector<Permutation>& vertices() const { return vertices_; }
  const Bitset& row(std::size_t rank) const { return rows_[rank]; }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;

  /// DIMACS edge format; vertex k is the permutation of rank k-1.
  void write_dimacs(std::ostream& out) const;

private:
  int n_ = 0;
  int t_ = 0;
  std::vector<Permutation> vertices_;
  std::vector<Bitset> rows_;
};

/// Requires F in I(n,t). True iff no permutation outside F intersects every member.
bool is_maximal(const PermFamily& family, int t, const Limits& limits = {});

/// Greedily extends F (scanning S_n in lexicographic order) to a maximal member of I(n,t).
PermFamily maximalize(const PermFamily& family, int t, const Limits& limits = {});

}  // namespace tcyc

#endif  // TCYC_INTERSECT_HPP
