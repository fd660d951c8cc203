#pragma once

// Certificate checking. Uses nothing from Perm beyond delta() and equality,
// and nothing at all from the synthesis pipeline.

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>

#include "dcyc/certificate.hpp"
#include "dcyc/perm.hpp"

namespace dcyc {

enum class Violation {
  kNone,
  kVertexSize,        // a vertex (or alpha/beta) is not a permutation of size n
  kLengthOutOfRange,  // length ∉ [3, n!]
  kLengthMismatch,    // number of vertices differs from the length field
  kEdgeMismatch,      // vertices[0], vertices[1] differ from alpha, beta
  kDuplicate,         // a vertex repeats
  kNotAdjacent,       // consecutive vertices agree somewhere
};

inline const char* to_string(Violation v) {
  switch (v) {
    case Violation::kNone: return "none";
    case Violation::kVertexSize: return "vertex-size";
    case Violation::kLengthOutOfRange: return "length-out-of-range";
    case Violation::kLengthMismatch: return "length-mismatch";
    case Violation::kEdgeMismatch: return "edge-mismatch";
    case Violation::kDuplicate: return "duplicate-vertex";
    case Violation::kNotAdjacent: return "not-adjacent";
  }
  return "unknown";
}

struct Verdict {
  Violation violation = Violation::kNone;
  std::size_t index = 0;  // first offending vertex index, where meaningful
  std::string message;

  bool accepted() const { return violation == Violation::kNone; }
  explicit operator bool() const { return accepted(); }
};

inline Verdict check_certificate(const CycleCertificate& cert) {
  auto reject = [](Violation v, std::size_t index, std::string msg) {
    return Verdict{v, index, std::move(msg)};
  };
  const int n = cert.n;
  if (n < 1) return reject(Violation::kVertexSize, 0, "n must be positive");
  if (cert.alpha.size() != n) return reject(Violation::kVertexSize, 0, "alpha has the wrong size");
  if (cert.beta.size() != n) return reject(Violation::kVertexSize, 1, "beta has the wrong size");
  for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
    if (cert.vertices[i].size() != n) {
      return reject(Violation::kVertexSize, i, "vertex " + std::to_string(i) + " has size " +
                                                    std::to_string(cert.vertices[i].size()));
    }
  }
  const bool bounded = n <= 20;
  if (cert.length < 3 || (bounded && cert.length > factorial(n))) {
    return reject(Violation::kLengthOutOfRange, 0,
                  "length " + std::to_string(cert.length) + " outside [3, n!]");
  }
  if (cert.vertices.size() != cert.length) {
    return reject(Violation::kLengthMismatch, cert.vertices.size(),
                  "cycle lists " + std::to_string(cert.vertices.size()) + " vertices but length is " +
                      std::to_string(cert.length));
  }
  if (cert.vertices[0] != cert.alpha) {
    return reject(Violation::kEdgeMismatch, 0, "vertex 0 is not alpha");
  }
  if (cert.vertices[1] != cert.beta) {
    return reject(Violation::kEdgeMismatch, 1, "vertex 1 is not beta");
  }
  std::unordered_map<Perm, std::size_t> first_seen;
  for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
    auto [it, inserted] = first_seen.emplace(cert.vertices[i], i);
    if (!inserted) {
      return reject(Violation::kDuplicate, i, "vertex " + std::to_string(i) + " repeats vertex " +
                                                  std::to_string(it->second) + " (" +
                                                  format_perm(cert.vertices[i]) + ")");
    }
  }
  const std::size_t len = cert.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    const Perm& a = cert.vertices[i];
    const Perm& b = cert.vertices[(i + 1) % len];
    if (delta(a, b) != 0) {
      return reject(Violation::kNotAdjacent, i,
                    "vertices " + std::to_string(i) + " and " + std::to_string((i + 1) % len) + " (" +
                        format_perm(a) + ", " + format_perm(b) + ") agree in " +
                        std::to_string(delta(a, b)) + " position(s)");
    }
  }
  return {};
}

}  // namespace dcyc
