#pragma once

// Exact-length cycles through a prescribed edge in a dense explicit graph.
//
// The search is a plain depth-first extension of the path (u, v, ...) in
// canonical neighbour order. Its only pruning rule: give up on a branch when
// the unvisited vertices reachable from the path's end are fewer than the
// vertices still to be placed, or none of them can close back to u.
//
// For graphs with 2·δ ≥ |V| + 2 every edge lies on a cycle of every length
// in [3, |V|], so a failed search on such a graph is reported as an internal
// error rather than as a legitimate "no cycle" answer.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcyc/error.hpp"

namespace dcyc {

template <class G>
concept IndexedGraph = requires(const G& g, std::size_t i) {
  { g.size() } -> std::convertible_to<std::size_t>;
  { g.adjacent(i, i) } -> std::convertible_to<bool>;
  { g.neighbors(i).begin() };
  { g.neighbors(i).end() };
};

// Vertex indices v₁..v_k of a cycle; (v₁, v₂) is the prescribed edge.
struct BaseCycle {
  std::vector<std::size_t> vertices;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const BaseCycle&, const BaseCycle&) = default;
};

struct SearchOptions {
  // Maximum number of search nodes expanded; unset means unlimited.
  std::optional<std::uint64_t> node_budget;
};

template <IndexedGraph G>
std::size_t min_degree(const G& g) {
  std::size_t best = g.size() == 0 ? 0 : g.size() - 1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::size_t d = 0;
    for ([[maybe_unused]] auto w : g.neighbors(i)) ++d;
    best = std::min(best, d);
  }
  return best;
}

// 2·δ(g) ≥ |V(g)| + 2: the minimum-degree condition for edge pancyclicity.
template <IndexedGraph G>
bool check_min_degree_bound(const G& g) {
  return 2 * min_degree(g) >= g.size() + 2;
}

// Independent structural check of a candidate cycle.
template <IndexedGraph G>
bool is_base_cycle(const G& g, const BaseCycle& c, std::size_t u, std::size_t v) {
  const auto& vs = c.vertices;
  if (vs.size() < 3 || vs.size() > g.size()) return false;
  if (vs[0] != u || vs[1] != v) return false;
  std::vector<char> seen(g.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= g.size() || seen[vs[i]]) return false;
    seen[vs[i]] = 1;
    if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

template <IndexedGraph G>
std::optional<BaseCycle> find_cycle_through_edge(const G& g, std::size_t u, std::size_t v,
                                                 std::size_t k, const SearchOptions& options = {}) {
  const std::size_t order = g.size();
  if (u >= order || v >= order || u == v) throw InputError("edge endpoints out of range");
  if (!g.adjacent(u, v)) throw InputError("prescribed endpoints are not adjacent");
  if (k < 3 || k > order) {
    throw InputError("cycle length " + std::to_string(k) + " outside [3, " +
                     std::to_string(order) + "]");
  }

  std::vector<char> visited(order, 0);
  std::vector<std::size_t> path{u, v};
  visited[u] = visited[v] = 1;
  std::uint64_t expanded = 0;

  std::vector<std::size_t> queue;
  std::vector<char> reached(order, 0);
  // Unvisited vertices reachable from `from` must cover `remaining` slots and
  // include at least one neighbour of u.
  auto frontier_ok = [&](std::size_t from, std::size_t remaining) {
    std::fill(reached.begin(), reached.end(), 0);
    queue.clear();
    queue.push_back(from);
    reached[from] = 1;
    std::size_t count = 0;
    bool closes = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto w : g.neighbors(queue[head])) {
        if (visited[w] || reached[w]) continue;
        reached[w] = 1;
        queue.push_back(w);
        ++count;
        if (!closes && g.adjacent(w, u)) closes = true;
      }
    }
    return closes && count >= remaining;
  };

  std::function<bool()> extend = [&]() -> bool {
    if (options.node_budget && ++expanded > *options.node_budget) {
      throw BudgetExceededError("cycle search exceeded its node budget of " +
                                std::to_string(*options.node_budget));
    }
    const std::size_t cur = path.back();
    const std::size_t remaining = k - path.size();
    if (remaining == 0) return g.adjacent(cur, u);
    if (remaining > 1 && !frontier_ok(cur, remaining)) return false;
    for (auto w : g.neighbors(cur)) {
      if (visited[w]) continue;
      if (remaining == 1 && !g.adjacent(w, u)) continue;
      visited[w] = 1;
      path.push_back(w);
      if (extend()) return true;
      path.pop_back();
      visited[w] = 0;
    }
    return false;
  };

  if (!extend()) return std::nullopt;
  return BaseCycle{std::move(path)};
}

// As find_cycle_through_edge, but a miss is an exception: NoCycleError when
// the graph is below the minimum-degree bound, InternalError when above it.
template <IndexedGraph G>
BaseCycle cycle_through_edge(const G& g, std::size_t u, std::size_t v, std::size_t k,
                             const SearchOptions& options = {}) {
  if (auto c = find_cycle_through_edge(g, u, v, k, options)) return *std::move(c);
  if (check_min_degree_bound(g)) {
    throw InternalError("no cycle of length " + std::to_string(k) +
                        " found through an edge of a graph meeting the minimum-degree bound");
  }
  throw NoCycleError("no cycle of length " + std::to_string(k) + " through this edge");
}

// Lengths k for which every edge of g lies on a k-cycle. Graphs meeting the
// minimum-degree bound get [3, |V|] without searching; anything else is
// decided by exhaustive search over all edges, so keep those graphs small.
template <IndexedGraph G>
std::vector<std::size_t> guaranteed_lengths(const G& g) {
  std::vector<std::size_t> out;
  if (g.size() < 3) return out;
  if (check_min_degree_bound(g)) {
    for (std::size_t k = 3; k <= g.size(); ++k) out.push_back(k);
    return out;
  }
  for (std::size_t k = 3; k <= g.size(); ++k) {
    bool every_edge = true;
    bool any_edge = false;
    for (std::size_t a = 0; a < g.size() && every_edge; ++a) {
      for (auto b : g.neighbors(a)) {
        if (b <= a) continue;
        any_edge = true;
        if (!find_cycle_through_edge(g, a, b, k)) {
          every_edge = false;
          break;
        }
      }
    }
    if (every_edge && any_edge) out.push_back(k);
  }
  return out;
}

}  // namespace dcyc
