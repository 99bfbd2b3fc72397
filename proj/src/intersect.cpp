#include "tcyc/intersect.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace tcyc {

namespace {

void require_same_degree(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
}

/// Support masks of the cycles of one permutation.
std::vector<std::uint64_t> cycle_masks(const Permutation& p) {
  std::vector<std::uint64_t> masks;
  std::uint64_t seen = 0;
  for (int x = 1; x <= p.degree(); ++x) {
    if ((seen >> (x - 1)) & 1u) continue;
    std::uint64_t m = 0;
    for (int y = x; !((m >> (y - 1)) & 1u); y = p(y)) m |= std::uint64_t{1} << (y - 1);
    seen |= m;
    masks.push_back(m);
  }
  return masks;
}

std::uint64_t agreement_mask(const Permutation& a, const Permutation& b) {
  std::uint64_t m = 0;
  for (int x = 1; x <= a.degree(); ++x)
    if (a(x) == b(x)) m |= std::uint64_t{1} << (x - 1);
  return m;
}

// A cycle of sigma is also a cycle of pi exactly when pi agrees with sigma on its support.
int count_common(const std::vector<std::uint64_t>& masks_of_sigma, std::uint64_t agree) {
  int c = 0;
  for (auto m : masks_of_sigma) c += (m & ~agree) == 0;
  return c;
}

}  // namespace

std::vector<Permutation::Cycle> common_cycles(const Permutation& sigma, const Permutation& pi) {
  require_same_degree(sigma, pi);
  std::vector<Permutation::Cycle> out;
  for (auto& cycle : cycle_decomposition(sigma).cycles) {
    const bool shared = std::all_of(cycle.begin(), cycle.end(), [&](int x) { return sigma(x) == pi(x); });
    if (shared) out.push_back(std::move(cycle));
  }
  return out;
}

int common_cycle_count(const Permutation& sigma, const Permutation& pi) {
  require_same_degree(sigma, pi);
  return count_common(cycle_masks(sigma), agreement_mask(sigma, pi));
}

bool is_t_cycle_intersecting_pair(const Permutation& sigma, const Permutation& pi, int t) {
  return common_cycle_count(sigma, pi) >= t;
}

bool is_t_intersecting_pair(const Permutation& sigma, const Permutation& pi, int t) {
  require_same_degree(sigma, pi);
  return std::popcount(agreement_mask(sigma, pi)) >= t;
}

std::optional<std::pair<Permutation, Permutation>> find_non_intersecting_pair(const PermFamily& family, int t) {
  const auto& m = family.members();
  std::vector<std::vector<std::uint64_t>> masks;
  masks.reserve(m.size());
  for (const auto& p : m) masks.push_back(cycle_masks(p));
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a; b < m.size(); ++b)
      if (count_common(masks[a], agreement_mask(m[a], m[b])) < t) return std::pair{m[a], m[b]};
  return std::nullopt;
}

bool is_family_t_cycle_intersecting(const PermFamily& family, int t) {
  return !find_non_intersecting_pair(family, t).has_value();
}

int intersection_strength(const PermFamily& family) {
  int best = family.degree();
  const auto& m = family.members();
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a; b < m.size(); ++b) best = std::min(best, common_cycle_count(m[a], m[b]));
  return best;
}

std::optional<Subset> stabilized_points(const PermFamily& family, int t) {
  const int n = family.degree();
  if (t < 0 || t > n || family.empty()) return std::nullopt;
  if (family.size() != factorial(n - t)) return std::nullopt;
  std::uint64_t common = ~std::uint64_t{0};
  for (const auto& p : family) common &= p.fix_set().mask();
  const Subset fixed_by_all(n, common & Subset::prefix(n, n).mask());
  if (fixed_by_all.size() < t) return std::nullopt;
  // Every member fixes these t points and |F| = (n-t)!, so F is their full stabilizer.
  auto pts = fixed_by_all.members();
  pts.resize(static_cast<std::size_t>(t));
  return Subset(n, std::span<const int>(pts));
}

IntersectionGraph IntersectionGraph::build(int n, int t, const Limits& limits, int workers) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  IntersectionGraph g;
  g.n_ = n;
  g.t_ = t;
  g.vertices_ = all_permutations(n, limits.enumeration_cap);
  const std::size_t count = g.vertices_.size();
  std::vector<std::vector<std::uint64_t>> masks(count);
  for (std::size_t v = 0; v < count; ++v) masks[v] = cycle_masks(g.vertices_[v]);
  g.rows_.assign(count, Bitset(count));

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t u = begin; u < end; ++u)
      for (std::size_t v = 0; v < count; ++v)
        if (u != v && count_common(masks[u], agreement_mask(g.vertices_[u], g.vertices_[v])) >= t) g.rows_[u].set(v);
  };

  workers = std::max(1, workers);
  if (workers == 1) {
    fill(0, count);
  } else {
    std::vector<std::thread> pool;
    const std::size_t block = (count + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
    for (std::size_t begin = 0; begin < count; begin += block)
      pool.emplace_back(fill, begin, std::min(count, begin + block));
    for (auto& th : pool) th.join();
  }
  return g;
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

void IntersectionGraph::write_dimacs(std::ostream& out) const {
  out << "c t-cycle-intersection graph n=" << n_ << " t=" << t_ << "\n";
  out << "p edge " << vertex_count() << ' ' << edge_count() << '\n';
  for (std::size_t u = 0; u < vertex_count(); ++u)
    rows_[u].for_each([&](std::size_t v) {
      if (u < v) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    });
}

namespace {

bool intersects_all(const Permutation& candidate, const std::vector<Permutation>& members, int t) {
  const auto masks = cycle_masks(candidate);
  if (static_cast<int>(masks.size()) < t) return false;
  return std::all_of(members.begin(), members.end(),
                     [&](const Permutation& m) { return count_common(masks, agreement_mask(candidate, m)) >= t; });
}

void require_intersecting(const PermFamily& family, int t) {
  if (auto bad = find_non_intersecting_pair(family, t))
    throw std::invalid_argument("family is not " + std::to_string(t) + "-cycle-intersecting: " +
                                bad->first.to_cycle_string() + " vs " + bad->second.to_cycle_string());
}

}  // namespace

bool is_maximal(const PermFamily& family, int t, const Limits& limits) {
  require_intersecting(family, t);
  if (family.degree() > limits.enumeration_cap)
    throw std::length_error("maximality check exceeds the enumeration cap");
  bool maximal = true;
  for_each_permutation(family.degree(), [&](const Permutation& p) {
    if (maximal && !family.contains(p) && intersects_all(p, family.members(), t)) maximal = false;
  });
  return maximal;
}

PermFamily maximalize(const PermFamily& family, int t, const Limits& limits) {
  require_intersecting(family, t);
  if (family.degree() > limits.enumeration_cap) throw std::length_error("maximalize exceeds the enumeration cap");
  // One lexicographic pass suffices: a rejected candidate stays rejected as the family grows.
  std::vector<Permutation> members = family.members();
  for_each_permutation(family.degree(), [&](const Permutation& p) {
    if (!family.contains(p) && intersects_all(p, members, t)) members.push_back(p);
  });
  return PermFamily(family.degree(), std::move(members));
}

}  // namespace tcyc
