#pragma once

// Constructive edge pancyclicity of the derangement graph Γₙ, n ≥ 4.
//
// Given an edge (α, β) and a length L ∈ [3, n!], synthesize() returns a cycle
// of exactly L vertices through that edge:
//
//   * L ≤ 5 (L ≤ 4 when n = 4): α, β and L − 2 further permutations whose
//     matchings are pairwise disjoint with M(α) and M(β). Pairwise-disjoint
//     matchings are pairwise adjacent, so any order closes a cycle.
//
//   * otherwise: pick a cyclic σ none of whose nontrivial powers equals αβ⁻¹,
//     shift β by σ^{i₀} until it shares ≥ 2 positions with α, and move one
//     shared (position, value) pair to (n, n) by conjugating with
//     transpositions. Both α and β₀ = σ^{i₀}β then fix n and are adjacent in
//     the complement of Γₙ₋₁. A k-cycle there through (α, β₀) is lifted by
//     replacing every base vertex τ with a path inside its coset clique
//     {σⁱτ}, joined by delta-0 cross edges; the path lengths j₁..j_k give
//     a total of k + Σjₛ.
//
//   * n = 4, L ∈ {5, 6, 7}: the complement of Γ₃ is K₃,₃ and has no odd
//     cycles, so these lengths use the two cliques of α and β₀ directly.
//
// Every step the theory guarantees is re-checked; a failure raises
// InternalError with the offending state.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dcyc/cayley.hpp"
#include "dcyc/certificate.hpp"
#include "dcyc/dense_cycles.hpp"
#include "dcyc/error.hpp"
#include "dcyc/latin.hpp"
#include "dcyc/perm.hpp"

namespace dcyc {

// v ↦ left ∘ v ∘ right. Both components are the identity or a transposition,
// hence involutions.
struct Normalization {
  Perm left;
  Perm right;

  Perm apply(const Perm& v) const { return compose(compose(left, v), right); }
  Perm unapply(const Perm& v) const { return compose(compose(inverse(left), v), inverse(right)); }

  friend bool operator==(const Normalization&, const Normalization&) = default;
};

struct NormalizedInstance {
  Perm alpha;   // α′ = γαρ, fixes n
  Perm beta;    // β′ = γβρ
  Perm sigma;   // σ′ = γσγ⁻¹
  int shift;    // i₀; (σ′)^{i₀}β′ fixes n
  Normalization map;

  Perm shifted_beta() const { return compose(power(sigma, static_cast<std::uint64_t>(shift)), beta); }
};

struct LengthPlan {
  std::size_t k = 0;       // base cycle length
  std::vector<int> paths;  // clique path lengths j₁..j_k, each in [1, n − 1]

  std::uint64_t total() const {
    std::uint64_t t = k;
    for (int j : paths) t += static_cast<std::uint64_t>(j);
    return t;
  }
  friend bool operator==(const LengthPlan&, const LengthPlan&) = default;
};

namespace detail {

inline std::string describe(std::initializer_list<std::pair<const char*, const Perm*>> items) {
  std::ostringstream os;
  bool first = true;
  for (auto [name, p] : items) {
    os << (first ? "" : ", ") << name << "=" << format_perm(*p);
    first = false;
  }
  return os.str();
}

inline void require_edge(const Perm& alpha, const Perm& beta) {
  require_same_size(alpha, beta);
  if (delta(alpha, beta) != 0) throw InputError("alpha and beta are not adjacent");
}

// Rotates/reverses a cyclic vertex sequence so it starts (alpha, beta).
inline std::vector<Perm> orient(std::vector<Perm> seq, const Perm& alpha, const Perm& beta) {
  const std::size_t len = seq.size();
  auto it = std::find(seq.begin(), seq.end(), alpha);
  if (it == seq.end()) throw InternalError("constructed cycle does not contain alpha");
  std::rotate(seq.begin(), it, seq.end());
  if (seq[1] == beta) return seq;
  if (seq[len - 1] == beta) {
    std::reverse(seq.begin() + 1, seq.end());
    return seq;
  }
  throw InternalError("constructed cycle does not use the edge (alpha, beta)");
}

// Powers of `sigma` from 0 to n − 1.
inline std::vector<Perm> powers_of(const Perm& sigma) {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(sigma.size()));
  Perm cur = Perm::identity(sigma.size());
  for (int i = 0; i < sigma.size(); ++i) {
    out.push_back(cur);
    cur = compose(sigma, cur);
  }
  return out;
}

// Path of `edges` edges inside the clique {σᵖτ} from power `from` to power
// `to`; interior vertices are the smallest remaining powers.
inline void append_clique_path(std::vector<Perm>& out, std::span<const Perm> sigma_powers,
                               const Perm& tau, int from, int to, int edges) {
  const int n = static_cast<int>(sigma_powers.size());
  if (edges < 1 || edges > n - 1 || from == to) {
    throw InternalError("clique path request out of range");
  }
  out.push_back(compose(sigma_powers[from], tau));
  int interior = edges - 1;
  for (int p = 0; p < n && interior > 0; ++p) {
    if (p == from || p == to) continue;
    out.push_back(compose(sigma_powers[p], tau));
    --interior;
  }
  out.push_back(compose(sigma_powers[to], tau));
}

}  // namespace detail

// Lexicographically first single n-cycle σ with σⁱ ≠ αβ⁻¹ for 1 ≤ i < n.
inline Perm choose_sigma(const Perm& alpha, const Perm& beta) {
  detail::require_edge(alpha, beta);
  const int n = alpha.size();
  if (n < 4) throw InputError("choose_sigma needs n >= 4");
  const Perm forbidden = compose(alpha, inverse(beta));
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  do {
    Perm sigma = Perm::from_images(images);
    if (!is_cyclic(sigma)) continue;
    bool clear = true;
    Perm cur = sigma;
    for (int i = 1; i < n && clear; ++i) {
      if (cur == forbidden) clear = false;
      cur = compose(sigma, cur);
    }
    if (clear) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  throw InternalError("no admissible cyclic permutation for " +
                      detail::describe({{"alpha", &alpha}, {"beta", &beta}}));
}

// delta(α, σⁱβ) for i = 0..n−1. Sums to n for every cyclic σ.
inline std::vector<int> shift_profile(const Perm& alpha, const Perm& beta, const Perm& sigma) {
  detail::require_same_size(alpha, beta);
  detail::require_same_size(alpha, sigma);
  std::vector<int> profile;
  Perm cur = beta;
  for (int i = 0; i < alpha.size(); ++i) {
    profile.push_back(delta(alpha, cur));
    cur = compose(sigma, cur);
  }
  return profile;
}

// Smallest i₀ ∈ [1, n − 1] with delta(α, σ^{i₀}β) ≥ 2.
inline int find_coincidence_shift(const Perm& alpha, const Perm& beta, const Perm& sigma) {
  detail::require_edge(alpha, beta);
  if (!is_cyclic(sigma)) throw InputError("sigma must be a single n-cycle");
  const std::vector<int> profile = shift_profile(alpha, beta, sigma);
  for (int i = 1; i < alpha.size(); ++i) {
    if (profile[i] >= 2) return i;
  }
  throw InternalError("no shift with two coincidences for " +
                      detail::describe({{"alpha", &alpha}, {"beta", &beta}, {"sigma", &sigma}}));
}

// Moves a coincidence of α and β₀ = σ^{i₀}β to position n with value n.
// Position n is used when it already coincides, otherwise the smallest
// coinciding position.
inline NormalizedInstance normalize(const Perm& alpha, const Perm& beta, const Perm& sigma, int shift) {
  detail::require_same_size(alpha, beta);
  detail::require_same_size(alpha, sigma);
  const int n = alpha.size();
  const Perm beta0 = compose(power(sigma, static_cast<std::uint64_t>(shift)), beta);

  int position = 0;
  if (alpha(n) == beta0(n)) {
    position = n;
  } else {
    for (int c = 1; c <= n && position == 0; ++c) {
      if (alpha(c) == beta0(c)) position = c;
    }
  }
  if (position == 0) {
    throw InputError("alpha and the shifted beta share no position");
  }
  const int value = alpha(position);

  Perm right = position == n ? Perm::identity(n) : transposition(n, position, n);
  Perm left = value == n ? Perm::identity(n) : transposition(n, value, n);
  Normalization map{left, right};

  NormalizedInstance out{map.apply(alpha), map.apply(beta),
                         compose(compose(left, sigma), inverse(left)), shift, map};

  const Perm beta0_norm = out.shifted_beta();
  const bool ok = out.alpha(n) == n && beta0_norm(n) == n && delta(out.alpha, out.beta) == delta(alpha, beta) &&
                  delta(out.alpha, beta0_norm) == delta(alpha, beta0) && is_cyclic(out.sigma);
  if (!ok) {
    throw InternalError("normalization postcondition failed for " +
                        detail::describe({{"alpha", &alpha}, {"beta", &beta}, {"sigma", &sigma}}));
  }
  return out;
}

inline CycleCertificate denormalize(const CycleCertificate& cert, const Normalization& map) {
  CycleCertificate out = cert;
  out.alpha = map.unapply(cert.alpha);
  out.beta = map.unapply(cert.beta);
  for (Perm& v : out.vertices) v = map.unapply(v);
  return out;
}

// Base length k and clique path lengths for a lifted cycle of L vertices.
// k is the smallest admissible value with 2k ≤ L ≤ nk; the paths are filled
// greedily with n − 1, leaving the remainder in the last slot.
inline LengthPlan plan_lengths(int n, std::uint64_t length) {
  std::vector<std::size_t> candidates;
  if (n == 4) {
    if (length < 8 || length > 24) {
      throw InputError("lifted cycles for n = 4 cover lengths 8..24; use the short or two-clique "
                       "construction for length " + std::to_string(length));
    }
    candidates = {4, 6};
  } else if (n >= 5) {
    const std::uint64_t order = factorial(n);
    if (length < 6 || length > order) {
      throw InputError("lifted cycles cover lengths 6.." + std::to_string(order) +
                       "; use the short-cycle construction for length " + std::to_string(length));
    }
    const std::uint64_t base_max = factorial(n - 1);
    for (std::uint64_t k = 3; k <= base_max && 2 * k <= length; ++k) {
      candidates.push_back(static_cast<std::size_t>(k));
    }
  } else {
    throw InputError("length plans need n >= 4");
  }

  for (std::size_t k : candidates) {
    if (2 * k > length || length > k * static_cast<std::uint64_t>(n)) continue;
    LengthPlan plan{k, {}};
    std::uint64_t rest = length - k;
    for (std::size_t s = 0; s < k; ++s) {
      const std::uint64_t slots_after = k - s - 1;
      const std::uint64_t j = std::min<std::uint64_t>(static_cast<std::uint64_t>(n - 1), rest - slots_after);
      plan.paths.push_back(static_cast<int>(j));
      rest -= j;
    }
    return plan;
  }
  throw InternalError("no admissible base length for L = " + std::to_string(length));
}

// Lifts a base cycle τ₁..τ_k of stabilizer elements through the coset cliques
// {σⁱτₛ}. The entry vertex θₛ of clique s is its smallest-power member
// adjacent to τₛ₋₁, except θ₂ which is β. Returns the cycle starting at τ₁
// followed by β.
inline std::vector<Perm> lift_cycle(std::span<const Perm> base, const LengthPlan& plan, const Perm& sigma,
                                    const Perm& beta) {
  const std::size_t k = base.size();
  if (k < 3 || plan.k != k || plan.paths.size() != k) {
    throw InputError("length plan does not match the base cycle");
  }
  const int n = sigma.size();
  const std::vector<Perm> sigma_powers = detail::powers_of(sigma);

  std::vector<int> entry(k, 0);
  for (std::size_t s = 0; s < k; ++s) {
    const Perm& prev = base[(s + k - 1) % k];
    const Perm& tau = base[s];
    if (!in_stabilizer(tau)) throw InputError("base cycle vertex does not fix n");
    if (delta(prev, tau) < 2) {
      throw InternalError("consecutive base vertices share fewer than two positions: " +
                          detail::describe({{"prev", &prev}, {"tau", &tau}}));
    }
    if (s == 1) {
      int p = 0;
      while (p < n && compose(sigma_powers[p], tau) != beta) ++p;
      if (p == n || p == 0 || delta(prev, beta) != 0) {
        throw InputError("beta must be a non-representative member of the second clique adjacent to "
                         "the first base vertex");
      }
      entry[s] = p;
      continue;
    }
    int p = 1;
    while (p < n && delta(prev, compose(sigma_powers[p], tau)) != 0) ++p;
    if (p == n) {
      throw InternalError("no member of the clique of tau adjacent to its predecessor: " +
                          detail::describe({{"prev", &prev}, {"tau", &tau}, {"sigma", &sigma}}));
    }
    entry[s] = p;
  }

  // θ₁ P₁ τ₁ θ₂ P₂ τ₂ ... θ_k P_k τ_k, rotated to start at τ₁.
  std::vector<Perm> seq;
  seq.reserve(static_cast<std::size_t>(plan.total()));
  for (std::size_t s = 0; s < k; ++s) {
    detail::append_clique_path(seq, sigma_powers, base[s], entry[s], 0, plan.paths[s]);
  }
  std::rotate(seq.begin(), seq.begin() + plan.paths[0], seq.end());
  return seq;
}

// Cycles of length 3..5 from pairwise-disjoint matchings. Needs L ≤ n.
inline CycleCertificate short_cycle(const Perm& alpha, const Perm& beta, std::uint64_t length) {
  detail::require_edge(alpha, beta);
  const int n = alpha.size();
  if (length < 3 || length > 5) throw InputError("short cycles have length 3, 4 or 5");
  if (length > static_cast<std::uint64_t>(n)) {
    throw InputError("a short cycle of length " + std::to_string(length) + " needs n >= " +
                     std::to_string(length) + "; for n = 4 use the two-clique construction");
  }
  const auto extra = extend_disjoint_matchings(n, {matching_of(alpha), matching_of(beta)},
                                               static_cast<int>(length) - 2);
  CycleCertificate cert{n, alpha, beta, length, {alpha, beta}};
  for (const Matching& m : extra) cert.vertices.push_back(perm_of(m));
  return cert;
}

// n = 4 cycles of length 5..7 through the cliques of α′ and β₀′ in a
// normalized instance: α′ ⇝ α₀′ = σ^{i₀}α′ inside the first clique (p edges),
// cross edge α₀′β₀′, β₀′ ⇝ β′ inside the second (q edges), closing edge β′α′.
// p + q = L − 2 with p as large as possible. Returns the cycle starting α′, β′.
inline std::vector<Perm> two_clique_cycle(const NormalizedInstance& inst, std::uint64_t length) {
  if (length < 5 || length > 7) throw InputError("two-clique cycles have length 5, 6 or 7");
  const int n = inst.alpha.size();
  const std::vector<Perm> sigma_powers = detail::powers_of(inst.sigma);
  const Perm beta0 = inst.shifted_beta();
  const int rest = static_cast<int>(length) - 2;
  const int p = std::min(n - 1, rest - 1);
  const int q = rest - p;
  const int beta_power = (n - inst.shift) % n;

  std::vector<Perm> seq;
  detail::append_clique_path(seq, sigma_powers, inst.alpha, 0, inst.shift, p);
  detail::append_clique_path(seq, sigma_powers, beta0, 0, beta_power, q);
  if (delta(seq[static_cast<std::size_t>(p)], beta0) != 0) {
    throw InternalError("cross edge between the two cliques is missing");
  }
  return detail::orient(std::move(seq), inst.alpha, inst.beta);
}

// Synthesizes cycles in Γₙ for a fixed n, caching the complement of Γₙ₋₁.
// Immutable after construction; safe to share across threads.
class Synthesizer {
 public:
  static constexpr int kMaxN = 8;

  explicit Synthesizer(int n) : n_(check_n(n)), complement_(complement_graph(n)) {}

  int n() const { return n_; }
  const GraphView& complement() const { return complement_; }

  CycleCertificate synthesize(const Perm& alpha, const Perm& beta, std::uint64_t length) const {
    if (alpha.size() != n_ || beta.size() != n_) {
      throw InputError("alpha and beta must be permutations of size " + std::to_string(n_));
    }
    detail::require_edge(alpha, beta);
    const std::uint64_t order = factorial(n_);
    if (length < 3 || length > order) {
      throw InputError("length " + std::to_string(length) + " outside [3, " + std::to_string(order) + "]");
    }

    if (length <= 5 && length <= static_cast<std::uint64_t>(n_)) return short_cycle(alpha, beta, length);

    const Perm sigma = choose_sigma(alpha, beta);
    const int shift = find_coincidence_shift(alpha, beta, sigma);
    const NormalizedInstance inst = normalize(alpha, beta, sigma, shift);

    std::vector<Perm> seq;
    if (n_ == 4 && length <= 7) {
      seq = two_clique_cycle(inst, length);
    } else {
      seq = lifted(inst, length);
    }
    CycleCertificate cert{n_, inst.alpha, inst.beta, length, std::move(seq)};
    return denormalize(cert, inst.map);
  }

 private:
  static int check_n(int n) {
    if (n < 4) {
      throw InputError("unsupported n = " + std::to_string(n) +
                       ": edge pancyclicity holds only for n >= 4");
    }
    if (n > kMaxN) {
      throw InputError("unsupported n = " + std::to_string(n) + ": the explicit complement of the " +
                       "derangement graph is only built for n <= " + std::to_string(kMaxN));
    }
    return n;
  }

  std::vector<Perm> lifted(const NormalizedInstance& inst, std::uint64_t length) const {
    const LengthPlan plan = plan_lengths(n_, length);
    const Perm beta0 = inst.shifted_beta();
    const auto u = complement_.index_of(restrict_to_stabilizer(inst.alpha));
    const auto v = complement_.index_of(restrict_to_stabilizer(beta0));
    if (!u || !v) throw InternalError("normalized vertices missing from the complement graph");
    const BaseCycle base = cycle_through_edge(complement_, *u, *v, plan.k);

    std::vector<Perm> taus;
    taus.reserve(base.length());
    for (std::size_t idx : base.vertices) taus.push_back(extend_to_stabilizer(complement_.vertex(idx)));
    return detail::orient(lift_cycle(taus, plan, inst.sigma, inst.beta), inst.alpha, inst.beta);
  }

  int n_;
  GraphView complement_;
};

inline CycleCertificate synthesize(int n, const Perm& alpha, const Perm& beta, std::uint64_t length) {
  return Synthesizer(n).synthesize(alpha, beta, length);
}

}  // namespace dcyc
