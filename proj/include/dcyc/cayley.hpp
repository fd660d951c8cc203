#pragma once

// The derangement graph Γₙ = Cayley(Sₙ, Dₙ), its coset cliques, and explicit
// graph views used by the dense cycle search.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dcyc/error.hpp"
#include "dcyc/perm.hpp"

namespace dcyc {

inline bool adjacent(const Perm& p, const Perm& q) { return delta(p, q) == 0; }

// All of Sₙ in lexicographic order.
inline std::vector<Perm> enumerate_permutations(int n) {
  if (n < 1) throw InputError("n must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Perm> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

inline std::vector<Perm> enumerate_derangements(int n) {
  std::vector<Perm> out;
  for (Perm& p : enumerate_permutations(n)) {
    if (is_derangement(p)) out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<Perm> enumerate_cyclic(int n) {
  if (n < 2) throw InputError("cyclic permutations need n >= 2");
  std::vector<Perm> out;
  for (Perm& p : enumerate_permutations(n)) {
    if (is_cyclic(p)) out.push_back(std::move(p));
  }
  return out;
}

// Implicit Γₙ: the neighbours of p are {d ∘ p : d ∈ Dₙ}. Nothing beyond the
// derangement list is stored.
class DerangementGraph {
 public:
  explicit DerangementGraph(int n) : n_(n), derangements_(enumerate_derangements(n)) {}

  int n() const { return n_; }
  std::uint64_t order() const { return factorial(n_); }
  std::size_t degree() const { return derangements_.size(); }
  std::span<const Perm> connection_set() const { return derangements_; }

  bool adjacent(const Perm& p, const Perm& q) const { return dcyc::adjacent(p, q); }

  std::vector<Perm> neighbors(const Perm& p) const {
    if (p.size() != n_) throw InputError("vertex has the wrong size for this graph");
    std::vector<Perm> out;
    out.reserve(derangements_.size());
    for (const Perm& d : derangements_) out.push_back(compose(d, p));
    return out;
  }

 private:
  int n_;
  std::vector<Perm> derangements_;
};

inline std::vector<Perm> neighbors(const Perm& p) { return DerangementGraph(p.size()).neighbors(p); }

// ---------------------------------------------------------------------------
// Coset cliques A_τ = {σⁱτ : 0 ≤ i < n} for τ in the stabilizer T of position n.

struct Coset {
  Perm representative;        // the unique member fixing n
  Perm generator;             // cyclic σ
  std::vector<Perm> members;  // members[i] = σⁱ ∘ representative

  // Power i with members[i] == p, if p belongs to this coset.
  std::optional<int> power_of(const Perm& p) const {
    auto it = std::find(members.begin(), members.end(), p);
    if (it == members.end()) return std::nullopt;
    return static_cast<int>(it - members.begin());
  }
  bool contains(const Perm& p) const { return power_of(p).has_value(); }
};

inline bool in_stabilizer(const Perm& p) { return p(p.size()) == p.size(); }

inline Coset coset_of(const Perm& tau, const Perm& sigma) {
  detail::require_same_size(tau, sigma);
  if (!in_stabilizer(tau)) throw InputError("coset representative must fix n");
  if (!is_cyclic(sigma)) throw InputError("coset generator must be a single n-cycle");
  Coset c{tau, sigma, {}};
  c.members.reserve(static_cast<std::size_t>(tau.size()));
  Perm cur = tau;
  for (int i = 0; i < tau.size(); ++i) {
    c.members.push_back(cur);
    cur = compose(sigma, cur);
  }
  return c;
}

// Drops the last coordinate of τ ∈ T.
inline Perm restrict_to_stabilizer(const Perm& tau) {
  if (!in_stabilizer(tau)) throw InputError("restrict needs a permutation fixing n");
  if (tau.size() < 2) throw InputError("restrict needs n >= 2");
  std::vector<int> images(tau.images().begin(), tau.images().end() - 1);
  return Perm::from_images(std::move(images));
}

// Appends n to a permutation of [n − 1].
inline Perm extend_to_stabilizer(const Perm& reduced) {
  std::vector<int> images(reduced.images().begin(), reduced.images().end());
  images.push_back(reduced.size() + 1);
  return Perm::from_images(std::move(images));
}

// One coset per τ ∈ T, ordered by τ lexicographically.
inline std::vector<Coset> coset_partition(int n, const Perm& sigma) {
  if (n < 2) throw InputError("coset partition needs n >= 2");
  if (sigma.size() != n) throw InputError("generator size does not match n");
  if (!is_cyclic(sigma)) throw InputError("coset generator must be a single n-cycle");
  std::vector<Coset> out;
  for (const Perm& reduced : enumerate_permutations(n - 1)) {
    out.push_back(coset_of(extend_to_stabilizer(reduced), sigma));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit graph over a list of permutations. Vertices are addressed by index
// into the list; neighbour lists are in increasing index order.

class GraphView {
 public:
  template <class Adjacency>
  GraphView(std::vector<Perm> vertices, Adjacency&& adjacency, std::string label = {})
      : label_(std::move(label)), vertices_(std::move(vertices)) {
    const std::size_t v = vertices_.size();
    matrix_.assign(v * v, 0);
    adjacency_.resize(v);
    for (std::size_t i = 0; i < v; ++i) {
      index_.emplace(vertices_[i], i);
      for (std::size_t j = i + 1; j < v; ++j) {
        if (adjacency(vertices_[i], vertices_[j])) {
          matrix_[i * v + j] = matrix_[j * v + i] = 1;
        }
      }
    }
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        if (matrix_[i * v + j]) adjacency_[i].push_back(j);
      }
    }
  }

  std::size_t size() const { return vertices_.size(); }
  const std::string& label() const { return label_; }
  const Perm& vertex(std::size_t i) const { return vertices_.at(i); }
  std::span<const Perm> vertices() const { return vertices_; }

  std::optional<std::size_t> index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool adjacent(std::size_t i, std::size_t j) const { return matrix_[i * size() + j] != 0; }
  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

 private:
  std::string label_;
  std::vector<Perm> vertices_;
  std::unordered_map<Perm, std::size_t> index_;
  std::vector<unsigned char> matrix_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Complement of Γₙ₋₁ on Sₙ₋₁ (identified with T through extend_to_stabilizer):
// p ~ q iff p ≠ q and they agree somewhere.
inline GraphView complement_graph(int n) {
  if (n < 2) throw InputError("complement graph needs n >= 2");
  return GraphView(
      enumerate_permutations(n - 1),
      [](const Perm& p, const Perm& q) { return p != q && delta(p, q) >= 1; },
      "complement of derangement graph on S_" + std::to_string(n - 1));
}

// Γₙ materialized. Only sensible for small n.
inline GraphView derangement_graph_view(int n) {
  return GraphView(enumerate_permutations(n), [](const Perm& p, const Perm& q) { return adjacent(p, q); },
                   "derangement graph on S_" + std::to_string(n));
}

}  // namespace dcyc
