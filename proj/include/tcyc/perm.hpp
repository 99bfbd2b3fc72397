#ifndef TCYC_PERM_HPP
#define TCYC_PERM_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcyc/subset.hpp"

namespace tcyc {

/// A permutation of [n] = {1,...,n} in one-line notation: image[x-1] = sigma(x).
///
/// Points are 1-indexed everywhere in the public interface. Values are
/// immutable after construction and cheap to copy for the degrees this
/// library targets (n <= 64, the width of a Subset mask).
class Permutation {
public:
  using Cycle = std::vector<int>;

  /// Validates that `image` is a bijection of [n], n = image.size().
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int n, std::span<const Cycle> cycles);

  /// Parses cycle notation such as "(1 2 3)(4 5)"; "()" or "" is the identity.
  static Permutation parse_cycles(int n, std::string_view text);

  int degree() const { return static_cast<int>(image_.size()); }

  /// sigma(x) for x in [n]; unchecked.
  int operator()(int x) const { return image_[x - 1]; }

  /// Checked variant of operator().
  int at(int x) const;

  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;

  /// Points x with sigma(x) = x.
  Subset fix_set() const;

  int fixed_point_count() const;

  /// Lexicographic rank of the one-line image among all of S_n (Lehmer code).
  std::uint64_t rank() const;
  static Permutation unrank(int n, std::uint64_t rank);

  /// "(1 2 3)(4 5)"; fixed points are omitted, identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

private:
  std::vector<int> image_;
};

/// Result(x) = sigma(pi(x)).
Permutation compose(const Permutation& sigma, const Permutation& pi);

/// Cycles with the smallest element first, sorted by that element; 1-cycles included.
struct CycleDecomposition {
  std::vector<Permutation::Cycle> cycles;

  std::size_t size() const { return cycles.size(); }
  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

CycleDecomposition cycle_decomposition(const Permutation& sigma);

inline Subset fix_set(const Permutation& sigma) { return sigma.fix_set(); }

/// Sorted multiset of cycle lengths.
std::vector<int> cycle_type(const Permutation& sigma);

std::uint64_t factorial(int n);

/// Visits every permutation of [n] in lexicographic (= rank) order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// Materializes S_n in rank order. Refuses n > cap.
std::vector<Permutation> all_permutations(int n, int cap);

}  // namespace tcyc

template <>
struct std::hash<tcyc::Permutation> {
  std::size_t operator()(const tcyc::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.image()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

#endif  // TCYC_PERM_HPP
