#pragma once

// Permutations of [n] = {1..n} in one-line notation.
//
// Positions and values are 1-based at every public entry point. Composition
// is right-to-left: compose(p, q)(i) == p(q(i)), so q is applied first.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dcyc/error.hpp"

namespace dcyc {

class Perm {
 public:
  // Validates that `images` (1-based values) is a bijection on {1..n}.
  static Perm from_images(std::vector<int> images) {
    if (images.empty()) throw InputError("permutation must have at least one position");
    const int n = static_cast<int>(images.size());
    std::vector<int> seen(n + 1, 0);
    for (int v : images) {
      if (v < 1 || v > n) {
        throw InputError("value " + std::to_string(v) + " out of range for n = " +
                         std::to_string(n));
      }
      ++seen[v];
    }
    std::string repeated, missing;
    for (int v = 1; v <= n; ++v) {
      if (seen[v] > 1) repeated += (repeated.empty() ? "" : ", ") + std::to_string(v);
      if (seen[v] == 0) missing += (missing.empty() ? "" : ", ") + std::to_string(v);
    }
    if (!repeated.empty() || !missing.empty()) {
      throw InputError("not a permutation: value " + repeated + " repeated, value " + missing +
                       " missing");
    }
    return Perm(std::move(images));
  }

  static Perm identity(int n) {
    if (n < 1) throw InputError("permutation size must be positive");
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i + 1;
    return Perm(std::move(images));
  }

  int size() const { return static_cast<int>(images_.size()); }

  // Image of position i, both 1-based.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

  // One-line notation: images()[k] is the image of position k + 1.
  std::span<const int> images() const { return images_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  // Lexicographic on one-line notation (for equal sizes).
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {}

  friend Perm compose(const Perm& p, const Perm& q);
  friend Perm inverse(const Perm& p);
  friend Perm transposition(int n, int a, int b);

  std::vector<int> images_;
};

namespace detail {

inline void require_same_size(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) {
    throw InputError("size mismatch: " + std::to_string(p.size()) + " vs " +
                     std::to_string(q.size()));
  }
}

}  // namespace detail

// (p ∘ q)(i) = p(q(i)).
inline Perm compose(const Perm& p, const Perm& q) {
  detail::require_same_size(p, q);
  std::vector<int> r(q.images_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p.images_[q.images_[i] - 1];
  return Perm(std::move(r));
}

inline Perm inverse(const Perm& p) {
  std::vector<int> r(p.images_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[p.images_[i] - 1] = static_cast<int>(i) + 1;
  return Perm(std::move(r));
}

inline Perm power(const Perm& p, std::uint64_t exponent) {
  Perm result = Perm::identity(p.size());
  Perm base = p;
  while (exponent > 0) {
    if (exponent & 1U) result = compose(base, result);
    exponent >>= 1U;
    if (exponent > 0) base = compose(base, base);
  }
  return result;
}

// Number of positions on which p and q agree, i.e. the number of fixed points
// of p⁻¹q.
inline int delta(const Perm& p, const Perm& q) {
  detail::require_same_size(p, q);
  int agree = 0;
  for (int i = 1; i <= p.size(); ++i) agree += p(i) == q(i) ? 1 : 0;
  return agree;
}

inline bool is_derangement(const Perm& p) { return delta(p, Perm::identity(p.size())) == 0; }

// True iff p is a single n-cycle.
inline bool is_cyclic(const Perm& p) {
  int orbit = 1;
  for (int x = p(1); x != 1; x = p(x)) ++orbit;
  return orbit == p.size();
}

inline Perm transposition(int n, int a, int b) {
  if (a == b) throw InputError("transposition needs two distinct points");
  if (a < 1 || a > n || b < 1 || b > n) {
    throw InputError("transposition point out of range for n = " + std::to_string(n));
  }
  Perm t = Perm::identity(n);
  std::swap(t.images_[a - 1], t.images_[b - 1]);
  return t;
}

inline std::uint64_t factorial(int n) {
  if (n < 0) throw InputError("factorial of a negative number");
  if (n > 20) throw InputError("n! overflows 64 bits for n > 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// |Dₙ| via D₀ = 1, D₁ = 0, Dₙ = (n − 1)(Dₙ₋₁ + Dₙ₋₂).
inline std::uint64_t derangement_count(int n) {
  if (n < 0) throw InputError("derangement count of a negative size");
  if (n > 20) throw InputError("derangement count overflows 64 bits for n > 20");
  std::uint64_t prev = 1, cur = 0;  // D₀, D₁
  if (n == 0) return prev;
  for (int i = 2; i <= n; ++i) {
    const std::uint64_t next = static_cast<std::uint64_t>(i - 1) * (cur + prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

// ---------------------------------------------------------------------------
// Perfect matchings of K_{n,n}

// The pair set {(i, π(i))}, sorted by position.
struct Matching {
  std::vector<std::pair<int, int>> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

inline Matching matching_of(const Perm& p) {
  Matching m;
  m.pairs.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) m.pairs.emplace_back(i, p(i));
  return m;
}

// Inverse of matching_of. Throws InputError if the pairs are not a perfect
// matching on {1..n} × {1..n}.
inline Perm perm_of(const Matching& m) {
  const int n = m.size();
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (auto [pos, val] : m.pairs) {
    if (pos < 1 || pos > n || images[pos - 1] != 0) {
      throw InputError("matching does not cover every position exactly once");
    }
    images[pos - 1] = val;
  }
  return Perm::from_images(std::move(images));
}

inline bool disjoint(const Matching& a, const Matching& b) {
  std::vector<std::pair<int, int>> x = a.pairs, y = b.pairs;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Text form: contiguous digits when n ≤ 9, comma-separated otherwise.

inline std::string format_perm(const Perm& p) {
  std::string out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p.size() <= 9) {
      out += static_cast<char>('0' + p(i));
    } else {
      if (i > 1) out += ',';
      out += std::to_string(p(i));
    }
  }
  return out;
}

inline Perm parse_perm(std::string_view text) {
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InputError("malformed permutation entry '" + std::string(tok) + "'");
      }
      images.push_back(v);
      start = end + 1;
    }
  } else {
    if (text.empty()) throw InputError("empty permutation text");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InputError("malformed permutation text '" + std::string(text) + "'");
      }
      images.push_back(c - '0');
    }
  }
  return Perm::from_images(std::move(images));
}

inline std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << format_perm(p); }

}  // namespace dcyc

template <>
struct std::hash<dcyc::Perm> {
  std::size_t operator()(const dcyc::Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : p.images()) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
    return h;
  }
};
