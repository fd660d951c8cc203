#include "dcyc/latin.hpp"

#include <random>
#include <vector>

#include "dcyc/cayley.hpp"
#include "gtest/gtest.h"

namespace dcyc {
namespace {

bool pairwise_disjoint(const std::vector<Matching>& ms) {
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!disjoint(ms[i], ms[j])) return false;
  return true;
}

TEST(LatinTest, AllPairsAllowedGivesIdentity) {
  const auto m = bipartite_perfect_matching(3, [](int, int) { return true; });
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, matching_of(Perm::identity(3)));
}

TEST(LatinTest, ComplementOfIdentityOnTwo) {
  const auto m = bipartite_perfect_matching(2, [](int p, int v) { return p != v; });
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->pairs, (std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}));
}

TEST(LatinTest, NoMatchingIsAValue) {
  // Position 1 has no allowed value.
  EXPECT_FALSE(bipartite_perfect_matching(3, [](int p, int) { return p != 1; }).has_value());
  // Hall violation: positions 1 and 2 may only use value 1.
  EXPECT_FALSE(bipartite_perfect_matching(3, [](int p, int v) { return p == 3 || v == 1; }).has_value());
}

TEST(LatinTest, NeedsAugmentingPath) {
  // Greedy takes 1→1, then 2 can only use 1; augmentation must move 1 to 2.
  const auto m = bipartite_perfect_matching(2, [](int p, int v) { return p == 1 || v == 1; });
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->pairs, (std::vector<std::pair<int, int>>{{1, 2}, {2, 1}}));
}

TEST(LatinTest, TwoRowRectangleAlwaysExtends) {
  for (int n : {3, 4, 5}) {
    const auto sn = enumerate_permutations(n);
    for (const Perm& a : sn) {
      for (const Perm& b : sn) {
        if (!adjacent(a, b)) continue;
        const auto m = bipartite_perfect_matching(n, [&](int p, int v) { return a(p) != v && b(p) != v; });
        ASSERT_TRUE(m.has_value()) << format_perm(a) << " " << format_perm(b);
        EXPECT_TRUE(adjacent(perm_of(*m), a));
        EXPECT_TRUE(adjacent(perm_of(*m), b));
      }
    }
  }
}

TEST(LatinTest, ExtendFiveOnN5) {
  const std::vector<Matching> base{matching_of(Perm::identity(5)), matching_of(parse_perm("21453"))};
  const auto extra = extend_disjoint_matchings(5, base, 3);
  ASSERT_EQ(extra.size(), 3U);
  std::vector<Matching> all = base;
  all.insert(all.end(), extra.begin(), extra.end());
  EXPECT_TRUE(pairwise_disjoint(all));
  for (const Matching& x : all)
    for (const Matching& y : all)
      if (!(x == y)) {
        EXPECT_TRUE(adjacent(perm_of(x), perm_of(y)));
      }
}

TEST(LatinTest, CapacityIsN) {
  const std::vector<Matching> base{matching_of(Perm::identity(4)), matching_of(parse_perm("2143"))};
  EXPECT_EQ(extend_disjoint_matchings(4, base, 2).size(), 2U);
  EXPECT_THROW(extend_disjoint_matchings(4, base, 3), InputError);
  EXPECT_THROW(extend_disjoint_matchings(4, {matching_of(Perm::identity(4)), matching_of(parse_perm("2134"))}, 1),
               InputError);
}

// Every family of r < n pairwise-disjoint matchings extends by one. All
// cliques of Γₙ of size < n, n = 3, 4.
TEST(LatinTest, ExhaustiveOneStepExtension) {
  for (int n : {3, 4}) {
    const auto sn = enumerate_permutations(n);
    std::vector<std::size_t> clique;
    std::size_t checked = 0;
    auto grow = [&](auto&& self, std::size_t from) -> void {
      if (!clique.empty()) {
        std::vector<Matching> family;
        for (std::size_t i : clique) family.push_back(matching_of(sn[i]));
        const auto extra = extend_disjoint_matchings(n, family, 1);
        family.push_back(extra.front());
        ASSERT_TRUE(pairwise_disjoint(family));
        ++checked;
      }
      if (clique.size() + 1 >= static_cast<std::size_t>(n)) return;
      for (std::size_t i = from; i < sn.size(); ++i) {
        bool ok = true;
        for (std::size_t j : clique) ok = ok && adjacent(sn[i], sn[j]);
        if (!ok) continue;
        clique.push_back(i);
        self(self, i + 1);
        clique.pop_back();
      }
    };
    grow(grow, 0);
    EXPECT_GT(checked, 0U);
  }
}

TEST(LatinTest, RandomFamiliesExtendToFullFactorization) {
  std::mt19937 rng(5);
  for (int n : {5, 6, 7}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> img(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) img[i] = i + 1;
      std::shuffle(img.begin(), img.end(), rng);
      std::vector<Matching> family{matching_of(Perm::from_images(img))};
      // Random second row: shuffle until disjoint from the first.
      std::vector<int> img2 = img;
      do std::shuffle(img2.begin(), img2.end(), rng);
      while (!adjacent(Perm::from_images(img), Perm::from_images(img2)));
      family.push_back(matching_of(Perm::from_images(img2)));
      const auto extra = extend_disjoint_matchings(n, family, n - 2);
      family.insert(family.end(), extra.begin(), extra.end());
      EXPECT_EQ(family.size(), static_cast<std::size_t>(n));
      EXPECT_TRUE(pairwise_disjoint(family));
    }
  }
}

}  // namespace
}  // namespace dcyc
