#pragma once

// Ground truth for synthesized cycles: a brute-force existence oracle and
// per-edge certification sweeps.
//
// oracle_cycle_exists is a depth-first search over Γₙ that generates
// neighbourhoods by left multiplication with derangements; it is limited to
// n ≤ 5.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "dcyc/cayley.hpp"
#include "dcyc/certificate.hpp"
#include "dcyc/checker.hpp"
#include "dcyc/error.hpp"
#include "dcyc/perm.hpp"
#include "dcyc/synthesis.hpp"

namespace dcyc {

namespace detail {

// Lexicographic rank of p within Sₙ.
inline std::size_t lex_rank(const Perm& p) {
  const int n = p.size();
  std::size_t rank = 0;
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int v = 1; v < p(i); ++v) smaller += used[v] ? 0 : 1;
    rank += static_cast<std::size_t>(smaller) * factorial(n - i);
    used[p(i)] = 1;
  }
  return rank;
}

}  // namespace detail

inline constexpr int kOracleMaxN = 5;

// Exhaustive: does some cycle of exactly `length` vertices use the edge
// (alpha, beta)? Non-edges answer false.
inline bool oracle_cycle_exists(int n, const Perm& alpha, const Perm& beta, std::uint64_t length) {
  if (n > kOracleMaxN) {
    throw InputError("the exhaustive oracle refuses n > " + std::to_string(kOracleMaxN));
  }
  if (n < 1 || alpha.size() != n || beta.size() != n) throw InputError("alpha and beta must have size n");
  if (delta(alpha, beta) != 0) return false;
  const std::uint64_t order = factorial(n);
  if (length < 3 || length > order) return false;

  const std::vector<Perm> derangements = enumerate_derangements(n);
  std::vector<char> visited(order, 0);
  std::vector<char> reached(order, 0);
  std::vector<Perm> path{alpha, beta};
  visited[detail::lex_rank(alpha)] = visited[detail::lex_rank(beta)] = 1;

  auto frontier_ok = [&](const Perm& from, std::uint64_t remaining) {
    std::fill(reached.begin(), reached.end(), 0);
    std::vector<Perm> queue{from};
    std::uint64_t count = 0;
    bool closes = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Perm cur = queue[head];
      for (const Perm& d : derangements) {
        Perm w = compose(d, cur);
        const std::size_t r = detail::lex_rank(w);
        if (visited[r] || reached[r]) continue;
        reached[r] = 1;
        ++count;
        closes = closes || delta(w, alpha) == 0;
        queue.push_back(std::move(w));
      }
    }
    return closes && count >= remaining;
  };

  auto extend = [&](auto&& self) -> bool {
    const Perm cur = path.back();
    const std::uint64_t remaining = length - path.size();
    if (remaining == 0) return delta(cur, alpha) == 0;
    if (remaining > 1 && !frontier_ok(cur, remaining)) return false;
    for (const Perm& d : derangements) {
      Perm w = compose(d, cur);
      const std::size_t r = detail::lex_rank(w);
      if (visited[r]) continue;
      if (remaining == 1 && delta(w, alpha) != 0) continue;
      visited[r] = 1;
      path.push_back(std::move(w));
      if (self(self)) return true;
      path.pop_back();
      visited[r] = 0;
    }
    return false;
  };
  return extend(extend);
}

// ---------------------------------------------------------------------------
// Per-edge sweeps

struct LengthResult {
  std::uint64_t length = 0;
  bool passed = false;
  std::string detail;        // empty on success
  std::uint64_t micros = 0;  // wall time for synthesize + check
};

struct EdgeReport {
  int n = 0;
  Perm alpha = Perm::identity(1);
  Perm beta = Perm::identity(1);
  std::vector<LengthResult> results;  // ordered by length

  std::size_t passed() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const LengthResult& r) { return r.passed; }));
  }
  bool all_passed() const { return passed() == results.size(); }
};

// Synthesizes and checks one certificate per requested length. Failures are
// recorded per length; the sweep never aborts early. `jobs` only affects
// scheduling: results are ordered by length.
inline EdgeReport certify_edge(const Synthesizer& synth, const Perm& alpha, const Perm& beta,
                               std::vector<std::uint64_t> lengths, unsigned jobs = 1) {
  if (delta(alpha, beta) != 0) throw InputError("alpha and beta are not adjacent");
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  EdgeReport report{synth.n(), alpha, beta, std::vector<LengthResult>(lengths.size())};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lengths.size(); i = next++) {
      LengthResult& r = report.results[i];
      r.length = lengths[i];
      const auto start = std::chrono::steady_clock::now();
      try {
        const Verdict verdict = check_certificate(synth.synthesize(alpha, beta, lengths[i]));
        r.passed = verdict.accepted();
        if (!r.passed) r.detail = std::string(to_string(verdict.violation)) + ": " + verdict.message;
      } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
      }
      r.micros = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(
                                                std::chrono::steady_clock::now() - start)
                                                .count());
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, lengths.size()))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

inline EdgeReport certify_edge(int n, const Perm& alpha, const Perm& beta,
                               std::vector<std::uint64_t> lengths, unsigned jobs = 1) {
  return certify_edge(Synthesizer(n), alpha, beta, std::move(lengths), jobs);
}

inline constexpr const char* kReportFormat = "dcyc-edge-report";

// Timing varies between runs, so it is only rendered on request.
inline std::string render_report_text(const EdgeReport& r, bool with_timing = false) {
  std::ostringstream os;
  os << "n=" << r.n << " alpha=" << format_perm(r.alpha) << " beta=" << format_perm(r.beta) << "\n";
  for (const LengthResult& x : r.results) {
    os << "length " << x.length << ": " << (x.passed ? "pass" : "FAIL");
    if (with_timing) os << " (" << x.micros << " us)";
    if (!x.detail.empty()) os << " - " << x.detail;
    os << "\n";
  }
  os << r.passed() << "/" << r.results.size() << " lengths certified\n";
  return os.str();
}

inline nlohmann::json report_to_json(const EdgeReport& r, bool with_timing = false) {
  nlohmann::json results = nlohmann::json::array();
  for (const LengthResult& x : r.results) {
    nlohmann::json entry{{"length", x.length}, {"status", x.passed ? "pass" : "fail"}};
    if (!x.detail.empty()) entry["detail"] = x.detail;
    if (with_timing) entry["micros"] = x.micros;
    results.push_back(std::move(entry));
  }
  return {
      {"format", kReportFormat},
      {"format_version", kCertificateFormatVersion},
      {"n", r.n},
      {"alpha", format_perm(r.alpha)},
      {"beta", format_perm(r.beta)},
      {"results", std::move(results)},
      {"passed", r.passed()},
      {"total", r.results.size()},
  };
}

}  // namespace dcyc
