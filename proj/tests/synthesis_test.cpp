#include "dcyc/synthesis.hpp"

#include <random>
#include <set>
#include <vector>

#include "dcyc/checker.hpp"
#include "gtest/gtest.h"

namespace dcyc {
namespace {

Perm P(const char* s) { return parse_perm(s); }

struct Edge {
  Perm alpha, beta;
};

std::vector<Edge> all_edges(int n) {
  std::vector<Edge> out;
  const auto sn = enumerate_permutations(n);
  for (const Perm& a : sn)
    for (const Perm& b : sn)
      if (a < b && adjacent(a, b)) out.push_back({a, b});
  return out;
}

std::vector<Edge> random_edges(int n, std::size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  const auto sn = enumerate_permutations(n);
  const auto dn = enumerate_derangements(n);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < count; ++i) {
    const Perm& a = sn[rng() % sn.size()];
    out.push_back({a, compose(dn[rng() % dn.size()], a)});
  }
  return out;
}

bool sigma_admissible(const Perm& sigma, const Perm& a, const Perm& b) {
  if (!is_cyclic(sigma)) return false;
  const Perm forbidden = compose(a, inverse(b));
  for (int i = 1; i < a.size(); ++i)
    if (power(sigma, static_cast<std::uint64_t>(i)) == forbidden) return false;
  return true;
}

TEST(SynthesisTest, ChooseSigma) {
  EXPECT_EQ(choose_sigma(P("1234"), P("2143")), P("2341"));
  const Perm s = choose_sigma(P("2341"), P("3412"));
  EXPECT_TRUE(sigma_admissible(s, P("2341"), P("3412")));
  // Lexicographically first admissible one, by brute force.
  for (const Edge& e : all_edges(4)) {
    Perm first = P("1234");
    for (const Perm& c : enumerate_cyclic(4)) {
      if (sigma_admissible(c, e.alpha, e.beta)) {
        first = c;
        break;
      }
    }
    EXPECT_EQ(choose_sigma(e.alpha, e.beta), first);
  }
  EXPECT_THROW(choose_sigma(P("1234"), P("2134")), InputError);
}

TEST(SynthesisTest, CoincidenceShift) {
  const Perm a = P("1234"), b = P("2143"), s = P("2341");
  EXPECT_EQ(find_coincidence_shift(a, b, s), 1);
  EXPECT_EQ(compose(s, b), P("3214"));
  EXPECT_EQ(delta(a, P("3214")), 2);
  EXPECT_EQ(shift_profile(a, b, s), (std::vector<int>{0, 2, 0, 2}));
  for (const Edge& e : all_edges(4)) {
    const Perm sigma = choose_sigma(e.alpha, e.beta);
    const int i0 = find_coincidence_shift(e.alpha, e.beta, sigma);
    EXPECT_NE(compose(power(sigma, static_cast<std::uint64_t>(i0)), e.beta), e.alpha);
  }
}

TEST(SynthesisTest, NormalizeIdentityCase) {
  const auto inst = normalize(P("1234"), P("2143"), P("2341"), 1);
  EXPECT_EQ(inst.map.left, Perm::identity(4));
  EXPECT_EQ(inst.map.right, Perm::identity(4));
  EXPECT_EQ(inst.alpha, P("1234"));
  EXPECT_EQ(inst.beta, P("2143"));
  EXPECT_EQ(inst.sigma, P("2341"));
}

void expect_normalized(const Perm& a, const Perm& b, const Perm& sigma, int i0, const NormalizedInstance& inst) {
  const int n = a.size();
  const Perm b0 = compose(power(sigma, static_cast<std::uint64_t>(i0)), b);
  EXPECT_EQ(inst.alpha(n), n);
  EXPECT_EQ(inst.shifted_beta()(n), n);
  EXPECT_EQ(delta(inst.alpha, inst.beta), 0);
  EXPECT_EQ(delta(inst.alpha, inst.shifted_beta()), delta(a, b0));
  EXPECT_TRUE(is_cyclic(inst.sigma));
  EXPECT_TRUE(sigma_admissible(inst.sigma, inst.alpha, inst.beta));
  EXPECT_EQ(inst.map.unapply(inst.alpha), a);
  EXPECT_EQ(inst.map.unapply(inst.beta), b);
}

TEST(SynthesisTest, NormalizeMovesCoincidenceToCorner) {
  // Find an n = 5 instance whose coincidence sits at position 2 with value 3.
  bool found = false;
  for (const Edge& e : random_edges(5, 4000, 3)) {
    const Perm sigma = choose_sigma(e.alpha, e.beta);
    const int i0 = find_coincidence_shift(e.alpha, e.beta, sigma);
    const auto inst = normalize(e.alpha, e.beta, sigma, i0);
    expect_normalized(e.alpha, e.beta, sigma, i0, inst);
    if (inst.map.right == transposition(5, 2, 5) && inst.map.left == transposition(5, 3, 5)) found = true;
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(normalize(P("1234"), P("2143"), P("2341"), 2), InputError);  // profile entry 0
}

TEST(SynthesisTest, NormalizeAllEdgesN4) {
  for (const Edge& e : all_edges(4)) {
    const Perm sigma = choose_sigma(e.alpha, e.beta);
    const int i0 = find_coincidence_shift(e.alpha, e.beta, sigma);
    expect_normalized(e.alpha, e.beta, sigma, i0, normalize(e.alpha, e.beta, sigma, i0));
  }
}

TEST(SynthesisTest, DenormalizeIdentityIsNoop) {
  const CycleCertificate c = synthesize(4, P("1234"), P("2143"), 8);
  EXPECT_EQ(denormalize(c, {Perm::identity(4), Perm::identity(4)}), c);
}

TEST(SynthesisTest, PlanLengths) {
  EXPECT_EQ(plan_lengths(5, 6), (LengthPlan{3, {1, 1, 1}}));
  EXPECT_EQ(plan_lengths(5, 120), (LengthPlan{24, std::vector<int>(24, 4)}));
  EXPECT_EQ(plan_lengths(5, 23), (LengthPlan{5, {4, 4, 4, 4, 2}}));
  EXPECT_EQ(plan_lengths(4, 8), (LengthPlan{4, {1, 1, 1, 1}}));
  EXPECT_EQ(plan_lengths(4, 24), (LengthPlan{6, {3, 3, 3, 3, 3, 3}}));
  EXPECT_THROW(plan_lengths(5, 5), InputError);
  EXPECT_THROW(plan_lengths(5, 121), InputError);
  EXPECT_THROW(plan_lengths(4, 7), InputError);
  EXPECT_THROW(plan_lengths(4, 25), InputError);
}

TEST(SynthesisTest, PlanLengthsInvariants) {
  for (int n : {4, 5, 6, 7}) {
    const std::uint64_t lo = n == 4 ? 8 : 6;
    for (std::uint64_t L = lo; L <= factorial(n); ++L) {
      const LengthPlan plan = plan_lengths(n, L);
      ASSERT_EQ(plan.total(), L);
      ASSERT_EQ(plan.paths.size(), plan.k);
      if (n == 4) {
        ASSERT_TRUE(plan.k == 4 || plan.k == 6);
      } else {
        ASSERT_GE(plan.k, 3U);
        ASSERT_LE(plan.k, factorial(n - 1));
        // smallest admissible k
        ASSERT_TRUE(plan.k == 3 || L > (plan.k - 1) * static_cast<std::uint64_t>(n));
      }
      for (int j : plan.paths) {
        ASSERT_GE(j, 1);
        ASSERT_LE(j, n - 1);
      }
    }
  }
}

TEST(SynthesisTest, LiftAllUnitPaths) {
  // Normalized instance of the n = 5 edge (12345, 21453) and a base triangle.
  const Perm a = P("12345"), b = P("21453");
  const Perm sigma = choose_sigma(a, b);
  const auto inst = normalize(a, b, sigma, find_coincidence_shift(a, b, sigma));
  const GraphView g = complement_graph(5);
  const auto u = *g.index_of(restrict_to_stabilizer(inst.alpha));
  const auto v = *g.index_of(restrict_to_stabilizer(inst.shifted_beta()));
  const BaseCycle base = cycle_through_edge(g, u, v, 3);
  std::vector<Perm> taus;
  for (std::size_t i : base.vertices) taus.push_back(extend_to_stabilizer(g.vertex(i)));

  const auto seq = lift_cycle(taus, LengthPlan{3, {1, 1, 1}}, inst.sigma, inst.beta);
  ASSERT_EQ(seq.size(), 6U);
  EXPECT_EQ(seq[0], inst.alpha);
  EXPECT_EQ(seq[1], inst.beta);
  // θ τ θ τ θ τ, rotated to start at τ₁: even slots are base vertices.
  EXPECT_EQ(seq[0], taus[0]);
  EXPECT_EQ(seq[2], taus[1]);
  EXPECT_EQ(seq[4], taus[2]);
  const CycleCertificate cert{5, inst.alpha, inst.beta, 6, seq};
  EXPECT_TRUE(check_certificate(cert)) << check_certificate(cert).message;
  EXPECT_TRUE(check_certificate(denormalize(cert, inst.map)));
}

TEST(SynthesisTest, ShortCycles) {
  const CycleCertificate c = short_cycle(P("12345"), P("21453"), 3);
  ASSERT_EQ(c.vertices.size(), 3U);
  // Hand trace of the canonical matching order.
  EXPECT_EQ(c.vertices[2], P("45231"));
  for (const Perm& x : c.vertices)
    for (const Perm& y : c.vertices)
      if (x != y) {
        EXPECT_TRUE(adjacent(x, y));
      }
  const CycleCertificate c4 = short_cycle(P("1234"), P("2143"), 4);
  EXPECT_TRUE(check_certificate(c4));
  EXPECT_TRUE(check_certificate(short_cycle(P("12345"), P("21453"), 5)));
  EXPECT_THROW(short_cycle(P("1234"), P("2143"), 5), InputError);
  EXPECT_THROW(short_cycle(P("12345"), P("21453"), 6), InputError);
}

TEST(SynthesisTest, TwoCliqueCycles) {
  for (const Edge& e : all_edges(4)) {
    const Perm sigma = choose_sigma(e.alpha, e.beta);
    const auto inst = normalize(e.alpha, e.beta, sigma, find_coincidence_shift(e.alpha, e.beta, sigma));
    const Coset first = coset_of(inst.alpha, inst.sigma);
    for (std::uint64_t L : {5U, 6U, 7U}) {
      const auto seq = two_clique_cycle(inst, L);
      ASSERT_EQ(seq.size(), L);
      std::size_t in_first = 0;
      for (const Perm& v : seq) in_first += first.contains(v);
      // p edges inside the first clique: p + 1 vertices there.
      const std::size_t p = L == 5 ? 2 : 3;
      EXPECT_EQ(in_first, p + 1);
      EXPECT_TRUE(check_certificate({4, inst.alpha, inst.beta, L, seq}));
    }
    EXPECT_THROW(two_clique_cycle(inst, 8), InputError);
  }
}

TEST(SynthesisTest, HamiltonCycleN4) {
  const CycleCertificate c = synthesize(4, P("1234"), P("2143"), 24);
  EXPECT_EQ(c.vertices.size(), 24U);
  EXPECT_TRUE(check_certificate(c));
}

TEST(SynthesisTest, ExhaustiveN4) {
  const Synthesizer synth(4);
  std::size_t passes = 0;
  for (const Edge& e : all_edges(4)) {
    for (std::uint64_t L = 3; L <= 24; ++L) {
      const Verdict v = check_certificate(synth.synthesize(e.alpha, e.beta, L));
      ASSERT_TRUE(v) << format_perm(e.alpha) << " " << format_perm(e.beta) << " L=" << L << ": " << v.message;
      ++passes;
      // Both orientations of the edge.
      ASSERT_TRUE(check_certificate(synth.synthesize(e.beta, e.alpha, L)));
    }
  }
  EXPECT_EQ(passes, 2376U);
}

TEST(SynthesisTest, RandomEdgesN5AllLengths) {
  const Synthesizer synth(5);
  for (const Edge& e : random_edges(5, 50, 17)) {
    for (std::uint64_t L = 3; L <= 120; ++L) {
      const Verdict v = check_certificate(synth.synthesize(e.alpha, e.beta, L));
      ASSERT_TRUE(v) << format_perm(e.alpha) << " " << format_perm(e.beta) << " L=" << L << ": " << v.message;
    }
  }
}

TEST(SynthesisTest, RandomEdgesN6SampledLengths) {
  const Synthesizer synth(6);
  std::mt19937 rng(23);
  for (const Edge& e : random_edges(6, 10, 19)) {
    std::vector<std::uint64_t> lengths{3, 4, 5, 6, 7, 720};
    for (int i = 0; i < 8; ++i) lengths.push_back(8 + rng() % 713);
    for (std::uint64_t L : lengths) {
      const Verdict v = check_certificate(synth.synthesize(e.alpha, e.beta, L));
      ASSERT_TRUE(v) << "L=" << L << ": " << v.message;
    }
  }
}

TEST(SynthesisTest, Deterministic) {
  const Synthesizer a(5), b(5);
  for (std::uint64_t L : {3U, 6U, 47U, 120U}) {
    EXPECT_EQ(write_certificate(a.synthesize(P("12345"), P("21453"), L)),
              write_certificate(b.synthesize(P("12345"), P("21453"), L)));
  }
}

TEST(SynthesisTest, RejectsBadInput) {
  EXPECT_THROW(Synthesizer(3), InputError);
  EXPECT_THROW(synthesize(3, P("123"), P("231"), 3), InputError);
  EXPECT_THROW(synthesize(4, P("1234"), P("2134"), 5), InputError);
  EXPECT_THROW(synthesize(4, P("1234"), P("2143"), 2), InputError);
  EXPECT_THROW(synthesize(4, P("1234"), P("2143"), 25), InputError);
  EXPECT_THROW(synthesize(5, P("1234"), P("2143"), 5), InputError);
}

}  // namespace
}  // namespace dcyc
