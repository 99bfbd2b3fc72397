#ifndef TCYC_SEARCH_HPP
#define TCYC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tcyc/family.hpp"
#include "tcyc/intersect.hpp"

namespace tcyc {

enum class SearchMode { size_only, enumerate_all };

struct SearchOptions {
  SearchMode mode = SearchMode::size_only;
  int workers = 1;
  /// Wall-clock bound in seconds; required above Limits::search_cap.
  std::optional<double> time_budget;
  /// Keep at most this many witnesses (0 keeps all). The total count is still reported.
  std::size_t max_witnesses = 0;
  /// Also report witness families grouped into conjugacy classes.
  bool symmetry_reduce = false;
  Limits limits;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t bound_cutoffs = 0;
  double wall_seconds = 0.0;
};

struct WitnessOrbit {
  PermFamily representative;  // lexicographically least conjugate
  std::size_t members = 0;    // witnesses in this conjugacy class
};

struct CliqueSearchResult {
  int n = 0;
  int t = 0;
  SearchMode mode = SearchMode::size_only;
  /// Exact when `complete`; otherwise the best size found before the budget ran out.
  std::size_t max_size = 0;
  std::vector<PermFamily> witnesses;
  std::size_t witness_count = 0;
  bool witnesses_truncated = false;
  bool complete = true;
  /// Every witness is t-cycle-intersecting, maximal and of size max_size.
  bool witnesses_valid = false;
  std::vector<WitnessOrbit> orbits;
  SearchStats stats;
};

/// Maximum cliques of a graph, as sorted vertex lists. Deterministic for any
/// worker count. `candidates`, when given, restricts the vertices that may be used.
struct CliqueSolution {
  std::size_t max_size = 0;
  std::vector<std::vector<std::size_t>> cliques;
  bool complete = true;
  SearchStats stats;
};

CliqueSolution solve_max_clique(const std::vector<Bitset>& adjacency, SearchMode mode, int workers = 1,
                                std::optional<double> time_budget = std::nullopt,
                                const Bitset* candidates = nullptr);

/// Maximum t-cycle-intersecting families of S_n.
CliqueSearchResult max_family_search(int n, int t, const SearchOptions& options = {});

/// Least conjugate g F g^{-1} over g in S_n, comparing sorted member lists.
PermFamily canonical_conjugate(const PermFamily& family);

}  // namespace tcyc

#endif  // TCYC_SEARCH_HPP
