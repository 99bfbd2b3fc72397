#include "tcyc/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace tcyc {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kNoBranch = std::numeric_limits<std::uint32_t>::max();

std::uint64_t pack(std::uint64_t size, std::uint32_t branch) { return (size << 32) | branch; }
std::uint64_t packed_size(std::uint64_t p) { return p >> 32; }
std::uint32_t packed_branch(std::uint64_t p) { return static_cast<std::uint32_t>(p & 0xffffffffu); }

/// Vertex order for greedy colouring: reverse degeneracy order (densest core first),
/// ties broken by vertex index.
std::vector<std::size_t> degeneracy_order(const std::vector<Bitset>& adj) {
  const std::size_t count = adj.size();
  std::vector<std::size_t> degree(count);
  for (std::size_t v = 0; v < count; ++v) degree[v] = adj[v].count();
  std::vector<bool> removed(count, false);
  std::vector<std::size_t> removal;
  removal.reserve(count);
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t pick = count;
    for (std::size_t v = 0; v < count; ++v)
      if (!removed[v] && (pick == count || degree[v] < degree[pick])) pick = v;
    removed[pick] = true;
    removal.push_back(pick);
    adj[pick].for_each([&](std::size_t u) {
      if (!removed[u]) --degree[u];
    });
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

/// Branch and bound over bitset candidate sets with greedy colouring bounds.
///
/// Top-level branches are numbered in the order a sequential search visits them.
/// In size-only mode a tie with the incumbent is still explored when the
/// incumbent came from a later branch, so the reported witness is the first
/// maximum clique in sequential order, whatever the worker count.
class Solver {
public:
  Solver(const std::vector<Bitset>& adjacency, SearchMode mode, std::optional<double> budget)
      : mode_(mode), budget_(budget) {
    const std::size_t count = adjacency.size();
    original_ = degeneracy_order(adjacency);
    new_id_.resize(count);
    for (std::size_t k = 0; k < count; ++k) new_id_[original_[k]] = k;
    adj_.assign(count, Bitset(count));
    for (std::size_t v = 0; v < count; ++v)
      adjacency[v].for_each([&](std::size_t u) { adj_[new_id_[v]].set(new_id_[u]); });
  }

  CliqueSolution run(int workers, const Bitset* candidates) {
    start_ = Clock::now();
    const std::size_t count = adj_.size();
    CliqueSolution out;
    if (count == 0) {
      out.stats.wall_seconds = 0.0;
      return out;
    }
    Bitset all(count);
    if (candidates)
      candidates->for_each([&](std::size_t v) { all.set(new_id_[v]); });
    else
      all.set_all();
    root_ = colour(all);

    workers = std::max(1, workers);
    std::vector<Worker> state(static_cast<std::size_t>(workers));
    if (workers == 1) {
      work(state[0]);
    } else {
      std::vector<std::thread> pool;
      for (auto& w : state) pool.emplace_back([this, &w] { work(w); });
      for (auto& th : pool) th.join();
    }

    const std::uint64_t final_size = packed_size(incumbent_.load());
    out.max_size = final_size;
    out.complete = !stop_.load();
    if (mode_ == SearchMode::size_only) {
      const Worker* best = nullptr;
      for (const auto& w : state)
        if (w.best_size == final_size && (!best || w.best_branch < best->best_branch)) best = &w;
      if (best) out.cliques.push_back(best->best_clique);
    } else {
      for (const auto& w : state)
        for (const auto& c : w.found)
          if (c.size() == final_size) out.cliques.push_back(c);
    }
    for (auto& c : out.cliques) {
      for (auto& v : c) v = original_[v];
      std::sort(c.begin(), c.end());
    }
    std::sort(out.cliques.begin(), out.cliques.end());
    for (const auto& w : state) {
      out.stats.nodes += w.nodes;
      out.stats.bound_cutoffs += w.cutoffs;
    }
    out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return out;
  }

private:
  struct Worker {
    std::vector<std::size_t> clique;
    std::uint32_t branch = 0;
    std::uint64_t nodes = 0;
    std::uint64_t cutoffs = 0;
    // size-only
    std::uint64_t best_size = 0;
    std::uint32_t best_branch = kNoBranch;
    std::vector<std::size_t> best_clique;
    // enumerate-all
    std::vector<std::vector<std::size_t>> found;
  };

  struct Coloured {
    std::vector<std::size_t> vertex;
    std::vector<std::uint32_t> colour;  // non-decreasing
  };

  Coloured colour(const Bitset& candidates) const {
    Coloured out;
    Bitset uncoloured = candidates;
    std::uint32_t k = 0;
    while (!uncoloured.none()) {
      ++k;
      Bitset independent = uncoloured;
      for (std::size_t v = independent.first(); v < independent.bits(); v = independent.first()) {
        uncoloured.reset(v);
        independent.reset(v);
        independent.and_not(adj_[v]);
        out.vertex.push_back(v);
        out.colour.push_back(k);
      }
    }
    return out;
  }

  bool prune(std::uint64_t bound, std::uint32_t branch) const {
    const std::uint64_t p = incumbent_.load(std::memory_order_relaxed);
    const std::uint64_t size = packed_size(p);
    if (mode_ == SearchMode::enumerate_all) return bound < size;
    return bound < size || (bound == size && packed_branch(p) <= branch);
  }

  void record(Worker& w) {
    const std::uint64_t size = w.clique.size();
    if (mode_ == SearchMode::size_only) {
      std::uint64_t cur = incumbent_.load();
      for (;;) {
        const bool better =
            size > packed_size(cur) || (size == packed_size(cur) && w.branch < packed_branch(cur));
        if (!better) return;
        if (incumbent_.compare_exchange_weak(cur, pack(size, w.branch))) break;
      }
      w.best_size = size;
      w.best_branch = w.branch;
      w.best_clique = w.clique;
      return;
    }
    std::uint64_t cur = incumbent_.load();
    while (size > packed_size(cur) && !incumbent_.compare_exchange_weak(cur, pack(size, 0))) {
    }
    if (size < packed_size(incumbent_.load())) return;
    if (!w.found.empty() && w.found.front().size() < size) w.found.clear();
    if (w.found.empty() || w.found.front().size() == size) w.found.push_back(w.clique);
  }

  bool out_of_time(Worker& w, bool force = false) {
    if (stop_.load(std::memory_order_relaxed)) return true;
    if (budget_ && (force || (w.nodes & 1023u) == 0) &&
        std::chrono::duration<double>(Clock::now() - start_).count() > *budget_) {
      stop_.store(true);
      return true;
    }
    return false;
  }

  void expand(Worker& w, Bitset candidates) {
    ++w.nodes;
    if (out_of_time(w)) return;
    const Coloured c = colour(candidates);
    for (std::size_t idx = c.vertex.size(); idx-- > 0;) {
      if (prune(w.clique.size() + c.colour[idx], w.branch)) {
        ++w.cutoffs;
        return;
      }
      const std::size_t v = c.vertex[idx];
      w.clique.push_back(v);
      Bitset next = candidates & adj_[v];
      if (next.none())
        record(w);
      else
        expand(w, std::move(next));
      w.clique.pop_back();
      candidates.reset(v);
      if (stop_.load(std::memory_order_relaxed)) return;
    }
  }

  void work(Worker& w) {
    const std::size_t m = root_.vertex.size();
    for (;;) {
      const std::size_t b = next_branch_.fetch_add(1);
      if (b >= m || out_of_time(w, true)) return;
      const std::size_t pos = m - 1 - b;
      w.branch = static_cast<std::uint32_t>(b);
      if (prune(root_.colour[pos], w.branch)) {
        ++w.cutoffs;
        continue;
      }
      const std::size_t v = root_.vertex[pos];
      Bitset earlier(adj_.size());
      for (std::size_t p = 0; p < pos; ++p) earlier.set(root_.vertex[p]);
      earlier &= adj_[v];
      w.clique.assign(1, v);
      ++w.nodes;
      if (earlier.none())
        record(w);
      else
        expand(w, std::move(earlier));
    }
  }

  SearchMode mode_;
  std::optional<double> budget_;
  std::vector<std::size_t> original_;  // new id -> caller's id
  std::vector<std::size_t> new_id_;
  std::vector<Bitset> adj_;
  Coloured root_;
  std::atomic<std::uint64_t> incumbent_{pack(0, kNoBranch)};
  std::atomic<std::size_t> next_branch_{0};
  std::atomic<bool> stop_{false};
  Clock::time_point start_;
};

}  // namespace

CliqueSolution solve_max_clique(const std::vector<Bitset>& adjacency, SearchMode mode, int workers,
                                std::optional<double> time_budget, const Bitset* candidates) {
  Solver solver(adjacency, mode, time_budget);
  return solver.run(workers, candidates);
}

PermFamily canonical_conjugate(const PermFamily& family) {
  const int n = family.degree();
  if (n > 8) throw std::length_error("canonical_conjugate is limited to n <= 8");
  std::optional<PermFamily> best;
  for_each_permutation(n, [&](const Permutation& g) {
    const Permutation g_inv = g.inverse();
    std::vector<Permutation> conj;
    conj.reserve(family.size());
    for (const auto& s : family) conj.push_back(compose(compose(g, s), g_inv));
    PermFamily candidate(n, std::move(conj));
    if (!best || candidate.members() < best->members()) best = std::move(candidate);
  });
  return *best;
}

CliqueSearchResult max_family_search(int n, int t, const SearchOptions& options) {
  if (n < 1) throw std::invalid_argument("search requires n >= 1");
  if (t < 0 || t > n) throw std::invalid_argument("search requires 0 <= t <= n");
  const Limits& limits = options.limits;
  if (n > limits.search_cap) {
    if (!options.time_budget)
      throw std::length_error("n = " + std::to_string(n) + " exceeds the search cap " +
                              std::to_string(limits.search_cap) + "; a time budget is required");
    if (n > limits.enumeration_cap)
      throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration cap");
  }

  const auto started = Clock::now();
  const IntersectionGraph graph = IntersectionGraph::build(n, t, limits, options.workers);
  std::vector<Bitset> rows;
  rows.reserve(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) rows.push_back(graph.row(v));
  // Permutations with fewer than t cycles cannot be members (each member meets itself).
  Bitset admissible(graph.vertex_count());
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    if (static_cast<int>(cycle_decomposition(graph.vertex(v)).size()) >= t) admissible.set(v);
  std::optional<double> remaining;
  if (options.time_budget)
    remaining = *options.time_budget - std::chrono::duration<double>(Clock::now() - started).count();
  const CliqueSolution sol = solve_max_clique(rows, options.mode, options.workers, remaining, &admissible);

  CliqueSearchResult r;
  r.n = n;
  r.t = t;
  r.mode = options.mode;
  r.max_size = sol.max_size;
  r.complete = sol.complete;
  r.stats = sol.stats;
  r.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  r.witness_count = sol.cliques.size();

  r.witnesses_valid = true;
  for (const auto& clique : sol.cliques) {
    std::vector<Permutation> members;
    Bitset common = admissible;
    for (auto v : clique) {
      members.push_back(graph.vertex(v));
      common &= graph.row(v);
    }
    PermFamily family(n, std::move(members));
    const bool valid =
        family.size() == r.max_size && is_family_t_cycle_intersecting(family, t) && common.none();
    r.witnesses_valid = r.witnesses_valid && valid;
    if (options.max_witnesses == 0 || r.witnesses.size() < options.max_witnesses)
      r.witnesses.push_back(std::move(family));
    else
      r.witnesses_truncated = true;
  }
  if (sol.cliques.empty()) r.witnesses_valid = false;

  if (options.symmetry_reduce) {
    std::map<std::vector<Permutation>, std::size_t> orbit_index;
    for (const auto& w : r.witnesses) {
      PermFamily rep = canonical_conjugate(w);
      auto [it, inserted] = orbit_index.try_emplace(rep.members(), r.orbits.size());
      if (inserted) r.orbits.push_back({std::move(rep), 0});
      ++r.orbits[it->second].members;
    }
  }
  return r;
}

}  // namespace tcyc
