#include "tcyc/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tcyc {

namespace {

int env_int(const char* name, int fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1 || v > 20) throw std::invalid_argument(std::string(name) + " must be an integer in [1, 20]");
  return static_cast<int>(v);
}

}  // namespace

Limits Limits::from_environment() {
  Limits limits;
  limits.enumeration_cap = env_int("TCYC_ENUMERATION_CAP", limits.enumeration_cap);
  limits.search_cap = env_int("TCYC_SEARCH_CAP", limits.search_cap);
  return limits;
}

PermFamily::PermFamily(int n, std::vector<Permutation> members) : n_(n), members_(std::move(members)) {
  for (const auto& p : members_)
    if (p.degree() != n) throw std::invalid_argument("family member has degree " + std::to_string(p.degree()) +
                                                     ", expected " + std::to_string(n));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool PermFamily::contains(const Permutation& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

long long total_fixed_points(const PermFamily& family) {
  long long total = 0;
  for (const auto& p : family) total += p.fixed_point_count();
  return total;
}

long long fixed_point_weight(const PermFamily& family) {
  long long total = 0;
  for (const auto& p : family)
    for (int x : p.fix_set().members()) total += x;
  return total;
}

}  // namespace tcyc
