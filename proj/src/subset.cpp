#include "tcyc/subset.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcyc {

namespace {

void check_ground(int n) {
  if (n < 0 || n > kMaxGround)
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside [0, 64]");
}

std::uint64_t bit(int n, int x) {
  if (x < 1 || x > n)
    throw std::out_of_range("point " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
  return std::uint64_t{1} << (x - 1);
}

}  // namespace

Subset::Subset(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  check_ground(n);
  if (n < kMaxGround && (mask >> n) != 0) throw std::out_of_range("subset mask has points outside [n]");
}

Subset::Subset(int n, std::initializer_list<int> members)
    : Subset(n, std::span<const int>(members.begin(), members.size())) {}

Subset::Subset(int n, std::span<const int> members) : n_(n) {
  check_ground(n);
  for (int x : members) mask_ |= bit(n, x);
}

Subset Subset::prefix(int n, int k) {
  check_ground(n);
  if (k < 0 || k > n) throw std::out_of_range("prefix length outside [0, n]");
  return Subset(n, k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
}

int Subset::max() const {
  if (mask_ == 0) throw std::domain_error("largest element of the empty set");
  return 64 - std::countl_zero(mask_);
}

Subset Subset::with(int x) const { return Subset(n_, mask_ | bit(n_, x)); }
Subset Subset::without(int x) const { return Subset(n_, mask_ & ~bit(n_, x)); }

std::vector<int> Subset::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int x : members()) {
    if (!first) s += ',';
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  // Lexicographic on sorted member lists: walk the lowest bits of both masks.
  std::uint64_t x = a.mask_, y = b.mask_;
  while (x != 0 && y != 0) {
    int ax = std::countr_zero(x), by = std::countr_zero(y);
    if (ax != by) return ax <=> by;
    x &= x - 1;
    y &= y - 1;
  }
  if (x == 0 && y == 0) return std::strong_ordering::equal;
  return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

SetSystem::SetSystem(int n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
  check_ground(n);
  for (const auto& s : sets_)
    if (s.ground() != n) throw std::invalid_argument("set " + s.to_string() + " has mismatched ground size");
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool SetSystem::contains(const Subset& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

bool is_t_intersecting(const SetSystem& system, int t) {
  const auto& sets = system.sets();
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a; b < sets.size(); ++b)
      if (sets[a].intersection_size(sets[b]) < t) return false;
  return true;
}

}  // namespace tcyc
