#pragma once

// Disjoint perfect matchings of K_{n,n}, added one at a time. A family of r
// pairwise-disjoint perfect matchings is a Latin rectangle; its complement in
// K_{n,n} is (n − r)-regular, so Hall's condition guarantees one more
// matching whenever r < n.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcyc/error.hpp"
#include "dcyc/perm.hpp"

namespace dcyc {

// Perfect matching of positions 1..n to values 1..n using only pairs for
// which allowed(position, value) holds. Positions are matched in increasing
// order, each first trying the smallest free allowed value, then augmenting
// paths explored in increasing value order.
template <class Allowed>
std::optional<Matching> bipartite_perfect_matching(int n, Allowed&& allowed) {
  if (n < 1) return std::nullopt;
  // owner[v] = position currently matched to value v (1-based), 0 if free.
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> value_of(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);

  auto augment = [&](auto&& self, int pos) -> bool {
    for (int v = 1; v <= n; ++v) {
      if (seen[v] || !allowed(pos, v)) continue;
      seen[v] = 1;
      if (owner[v] == 0 || self(self, owner[v])) {
        owner[v] = pos;
        value_of[pos] = v;
        return true;
      }
    }
    return false;
  };

  for (int pos = 1; pos <= n; ++pos) {
    bool placed = false;
    for (int v = 1; v <= n && !placed; ++v) {
      if (owner[v] == 0 && allowed(pos, v)) {
        owner[v] = pos;
        value_of[pos] = v;
        placed = true;
      }
    }
    if (placed) continue;
    std::fill(seen.begin(), seen.end(), 0);
    if (!augment(augment, pos)) return std::nullopt;
  }

  Matching m;
  for (int pos = 1; pos <= n; ++pos) m.pairs.emplace_back(pos, value_of[pos]);
  return m;
}

// Returns `extra` new perfect matchings such that `existing` together with
// them is pairwise disjoint.
inline std::vector<Matching> extend_disjoint_matchings(int n, const std::vector<Matching>& existing,
                                                       int extra) {
  if (n < 1) throw InputError("matching size must be positive");
  if (extra < 0) throw InputError("negative number of matchings requested");
  if (existing.size() + static_cast<std::size_t>(extra) > static_cast<std::size_t>(n)) {
    throw InputError("K_{n,n} has at most n pairwise-disjoint perfect matchings; asked for " +
                     std::to_string(existing.size() + static_cast<std::size_t>(extra)) +
                     " with n = " + std::to_string(n));
  }
  // used[pos][val]
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n) + 1,
                                      std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
  auto mark = [&](const Matching& m) {
    if (m.size() != n) throw InputError("matching has the wrong size");
    for (auto [pos, val] : m.pairs) {
      if (pos < 1 || pos > n || val < 1 || val > n) throw InputError("matching pair out of range");
      if (used[pos][val]) throw InputError("input matchings are not pairwise disjoint");
      used[pos][val] = 1;
    }
  };
  for (const Matching& m : existing) {
    perm_of(m);  // validates bijectivity
    mark(m);
  }

  std::vector<Matching> added;
  for (int r = 0; r < extra; ++r) {
    auto next = bipartite_perfect_matching(n, [&](int pos, int val) { return !used[pos][val]; });
    if (!next) throw InternalError("Latin rectangle extension failed; Hall's condition violated");
    mark(*next);
    added.push_back(std::move(*next));
  }
  return added;
}

}  // namespace dcyc
