#ifndef TCYC_SUBSET_HPP
#define TCYC_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tcyc {

inline constexpr int kMaxGround = 64;

/// A subset of [n] stored as a bitmask (bit x-1 <-> point x).
///
/// Ordering is lexicographic on the sorted member lists, so {1,2} < {1,2,3} < {1,3} < {2}.
class Subset {
public:
  Subset() = default;
  Subset(int n, std::uint64_t mask);
  Subset(int n, std::initializer_list<int> members);
  Subset(int n, std::span<const int> members);

  /// {1,...,k} inside [n].
  static Subset prefix(int n, int k);

  int ground() const { return n_; }
  std::uint64_t mask() const { return mask_; }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  bool contains(int x) const { return x >= 1 && x <= n_ && ((mask_ >> (x - 1)) & 1u); }

  bool is_subset_of(const Subset& other) const { return (mask_ & ~other.mask_) == 0; }
  int intersection_size(const Subset& other) const { return std::popcount(mask_ & other.mask_); }

  /// Largest member; throws on the empty set.
  int max() const;

  Subset with(int x) const;
  Subset without(int x) const;

  std::vector<int> members() const;
  std::string to_string() const;

  friend bool operator==(const Subset& a, const Subset& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b);

private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

inline Subset operator&(const Subset& a, const Subset& b) { return Subset(a.ground(), a.mask() & b.mask()); }
inline Subset operator|(const Subset& a, const Subset& b) { return Subset(a.ground(), a.mask() | b.mask()); }

/// A collection of distinct subsets of [n], kept sorted lexicographically.
class SetSystem {
public:
  SetSystem() = default;
  SetSystem(int n, std::vector<Subset> sets);

  int ground() const { return n_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(const Subset& s) const;

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
  int n_ = 0;
  std::vector<Subset> sets_;
};

/// True iff every pair of members (including a member with itself) meets in >= t points.
bool is_t_intersecting(const SetSystem& system, int t);

}  // namespace tcyc

#endif  // TCYC_SUBSET_HPP
