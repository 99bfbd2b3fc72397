#include "tcyc/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tcyc {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("permutation degree must be positive");
  if (n > kMaxGround) throw std::invalid_argument("permutation degree exceeds 64");
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("image value " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    if (seen[v]) throw std::invalid_argument("image value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity requires n >= 1");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(int n, std::span<const Cycle> cycles) {
  if (n < 1) throw std::invalid_argument("from_cycles requires n >= 1");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<bool> used(n + 1, false);
  for (const auto& cycle : cycles) {
    for (int x : cycle) {
      if (x < 1 || x > n)
        throw std::invalid_argument("cycle element " + std::to_string(x) + " outside [1, " + std::to_string(n) + "]");
      if (used[x]) throw std::invalid_argument("cycle element " + std::to_string(x) + " repeated");
      used[x] = true;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) image[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(image));
}

Permutation Permutation::parse_cycles(int n, std::string_view text) {
  std::vector<Cycle> cycles;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' at offset " + std::to_string(pos));
    ++pos;
    Cycle cycle;
    for (;;) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
      if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) + "' at offset " +
                                    std::to_string(pos));
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > kMaxGround) throw std::invalid_argument("cycle element too large");
        ++pos;
      }
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycles(n, cycles);
}

int Permutation::at(int x) const {
  if (x < 1 || x > degree()) throw std::out_of_range("point " + std::to_string(x) + " outside [1, n]");
  return image_[x - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int x = 1; x <= degree(); ++x) inv[image_[x - 1] - 1] = x;
  return Permutation(std::move(inv));
}

Subset Permutation::fix_set() const {
  std::uint64_t mask = 0;
  for (int x = 1; x <= degree(); ++x)
    if (image_[x - 1] == x) mask |= std::uint64_t{1} << (x - 1);
  return Subset(degree(), mask);
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int x = 1; x <= degree(); ++x) count += image_[x - 1] == x;
  return count;
}

std::uint64_t Permutation::rank() const {
  const int n = degree();
  if (n > 20) throw std::out_of_range("rank requires n <= 20");
  std::uint64_t r = 0;
  std::uint64_t used = 0;
  for (int k = 0; k < n; ++k) {
    const int v = image_[k] - 1;
    const int smaller_unused = v - std::popcount(used & ((std::uint64_t{1} << v) - 1));
    r = r * static_cast<std::uint64_t>(n - k) + static_cast<std::uint64_t>(smaller_unused);
    used |= std::uint64_t{1} << v;
  }
  return r;
}

Permutation Permutation::unrank(int n, std::uint64_t rank) {
  if (n < 1 || n > 20) throw std::out_of_range("unrank requires 1 <= n <= 20");
  if (rank >= factorial(n)) throw std::out_of_range("rank exceeds n! - 1");
  std::vector<int> digits(n);
  for (int k = n - 1; k >= 0; --k) {
    const auto base = static_cast<std::uint64_t>(n - k);
    digits[k] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> image(n);
  for (int k = 0; k < n; ++k) {
    image[k] = pool[digits[k]];
    pool.erase(pool.begin() + digits[k]);
  }
  return Permutation(std::move(image));
}

std::string Permutation::to_cycle_string() const {
  std::string s;
  for (const auto& cycle : cycle_decomposition(*this).cycles) {
    if (cycle.size() == 1) continue;
    s += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(cycle[k]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

Permutation compose(const Permutation& sigma, const Permutation& pi) {
  if (sigma.degree() != pi.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> image(sigma.degree());
  for (int x = 1; x <= sigma.degree(); ++x) image[x - 1] = sigma(pi(x));
  return Permutation(std::move(image));
}

CycleDecomposition cycle_decomposition(const Permutation& sigma) {
  const int n = sigma.degree();
  CycleDecomposition out;
  std::vector<bool> seen(n + 1, false);
  // Scanning x upward makes every cycle start at its minimum and keeps cycles sorted by it.
  for (int x = 1; x <= n; ++x) {
    if (seen[x]) continue;
    Permutation::Cycle cycle;
    for (int y = x; !seen[y]; y = sigma(y)) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::vector<int> cycle_type(const Permutation& sigma) {
  std::vector<int> lengths;
  for (const auto& c : cycle_decomposition(sigma).cycles) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  if (n < 1) throw std::invalid_argument("for_each_permutation requires n >= 1");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  do {
    visit(Permutation(image));
  } while (std::next_permutation(image.begin(), image.end()));
}

std::vector<Permutation> all_permutations(int n, int cap) {
  if (n > cap)
    throw std::length_error("S_" + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace tcyc
