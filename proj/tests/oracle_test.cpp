#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "numsg/oracle.hpp"

namespace numsg::oracle {
namespace {

using Ints = std::vector<unsigned>;

TEST(Closure, WorkedExample) {
  const auto s = closure({3, 7}, 36);
  EXPECT_EQ(s.gaps(), (Ints{1, 2, 4, 5, 8, 11}));
  EXPECT_EQ(s.conductor(), 12u);
  EXPECT_EQ(s.genus(), 6u);
  EXPECT_EQ(s.multiplicity(), 3u);
  for (unsigned x : {0u, 3u, 6u, 7u, 9u, 10u}) EXPECT_TRUE(s.contains(x)) << x;
  for (unsigned x = 12; x <= 40; ++x) EXPECT_TRUE(s.contains(x)) << x;
}

TEST(Closure, Naturals) {
  const auto n = closure({1}, 20);
  EXPECT_TRUE(n.gaps().empty());
  EXPECT_EQ(n.conductor(), 0u);
  EXPECT_EQ(n.multiplicity(), 1u);
  for (unsigned x = 0; x <= 20; ++x) EXPECT_TRUE(n.contains(x));
}

TEST(Closure, Errors) {
  EXPECT_THROW(closure({2, 4}, 30), not_numerical_semigroup);
  EXPECT_THROW(closure({0, 1}, 30), not_numerical_semigroup);
  EXPECT_THROW(closure(std::span<const unsigned>{}, 30), not_numerical_semigroup);
  // c + m = 15 needs a bitmap reaching 14.
  EXPECT_THROW(closure({3, 7}, 12), std::out_of_range);
  EXPECT_NO_THROW(closure({3, 7}, 14));
}

TEST(FromGaps, RejectsSetsThatAreNotClosed) {
  EXPECT_THROW(from_gaps(Ints{1, 2, 3, 8}, 30), not_numerical_semigroup);  // 4 + 4 = 8
  EXPECT_THROW(from_gaps(Ints{0}, 30), not_numerical_semigroup);
  EXPECT_EQ(from_gaps(Ints{1, 2, 4, 5, 8, 11}, 40).gaps(), (Ints{1, 2, 4, 5, 8, 11}));
}

TEST(NaiveDecomp, WorkedExample) {
  const auto s = closure({3, 7}, 36);
  EXPECT_EQ(naive_decomp(s, 14), 2u);  // 0 + 14, 7 + 7
  EXPECT_EQ(naive_decomp(s, 17), 3u);  // 0 + 17, 3 + 14, 7 + 10
  EXPECT_EQ(naive_decomp(s, 11), 0u);
}

TEST(NaiveDecomp, NaturalsAttainTheBound) {
  const auto n = closure({1}, 60);
  for (unsigned x = 0; x <= 60; ++x) EXPECT_EQ(naive_decomp(n, x), 1 + x / 2) << x;
}

TEST(NaiveIrreducibles, Examples) {
  EXPECT_EQ(naive_irreducibles(closure({3, 7}, 36)), (Ints{3, 7}));
  EXPECT_EQ(naive_irreducibles(closure({1}, 20)), Ints{1});
  EXPECT_EQ(naive_irreducibles(closure({4, 5, 6, 7}, 30)), (Ints{4, 5, 6, 7}));
  // Redundant generators are dropped.
  EXPECT_EQ(naive_irreducibles(closure({3, 6, 7, 9}, 36)), (Ints{3, 7}));
}

TEST(AperySet, Examples) {
  const auto se = apery_set(closure({3, 7}, 36));
  EXPECT_EQ(se.size(), 3u);
  EXPECT_EQ(se, (Ints{0, 7, 14}));
  EXPECT_EQ(apery_set(closure({2, 3}, 20)), (Ints{0, 3}));
  EXPECT_EQ(apery_set(closure({1}, 20)), Ints{0});
}

TEST(NaiveEnumerate, PublishedLayerSizes) {
  const auto layers = naive_enumerate(12);
  const std::vector<std::size_t> expected{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592};
  ASSERT_EQ(layers.size(), expected.size());
  for (std::size_t g = 0; g < expected.size(); ++g) EXPECT_EQ(layers[g].size(), expected[g]) << g;
}

TEST(NaiveEnumerate, GenusOne) {
  const auto layers = naive_enumerate(1);
  ASSERT_EQ(layers.size(), 2u);
  EXPECT_EQ(layers[0], std::vector<GapSet>{GapSet{}});
  EXPECT_EQ(layers[1], std::vector<GapSet>{GapSet{1}});
}

TEST(NaiveEnumerate, RejectsLargeGenus) {
  EXPECT_THROW(naive_enumerate(kMaxOracleGenus + 1), std::out_of_range);
}

TEST(NaiveEnumerate, GeneratorsRoundTrip) {
  const unsigned B = oracle_bound(10);
  for (const auto& layer : naive_enumerate(10)) {
    for (const auto& gs : layer) {
      const auto s = from_gaps(gs, B);
      EXPECT_EQ(closure(naive_irreducibles(s), B).gaps(), gs);
    }
  }
}

// Structural facts checked over every semigroup of genus <= 8.
class Enumerated : public ::testing::Test {
 protected:
  static constexpr unsigned kG = 8;
  static std::vector<NaiveSemigroup> all() {
    std::vector<NaiveSemigroup> out;
    for (const auto& layer : naive_enumerate(kG)) {
      for (const auto& gs : layer) out.push_back(from_gaps(gs, oracle_bound(kG)));
    }
    return out;
  }
};

TEST_F(Enumerated, RemovingAnElementKeepsClosureIffItIsIrreducible) {
  for (const auto& s : all()) {
    const auto irr = naive_irreducibles(s);
    for (unsigned x = 1; x <= s.bound(); ++x) {
      if (!s.contains(x)) continue;
      auto bits = s.bitmap();
      bits[x] = false;
      const bool irreducible = std::binary_search(irr.begin(), irr.end(), x);
      EXPECT_EQ(closed_under_addition(bits), irreducible) << "x = " << x;
    }
  }
}

TEST_F(Enumerated, DecompositionNumbersCharacterizeMembershipAndIrreducibility) {
  for (const auto& s : all()) {
    const auto irr = naive_irreducibles(s);
    for (unsigned x = 1; x <= 3 * kG; ++x) {
      const unsigned d = naive_decomp(s, x);
      EXPECT_EQ(d > 0, s.contains(x)) << x;
      EXPECT_EQ(d == 1, std::binary_search(irr.begin(), irr.end(), x)) << x;
      EXPECT_LE(d, 1 + x / 2);
    }
  }
}

TEST_F(Enumerated, StructuralBounds) {
  for (const auto& s : all()) {
    const auto irr = naive_irreducibles(s);
    ASSERT_FALSE(irr.empty());
    EXPECT_LE(irr.back(), s.conductor() + s.multiplicity());
    if (s.genus() >= 1) {
      EXPECT_LE(s.multiplicity(), s.genus() + 1);
      EXPECT_LE(s.conductor(), 2 * s.genus());
    }
    const auto app = apery_set(s);
    EXPECT_EQ(app.size(), s.multiplicity());
    for (unsigned x : irr) {
      if (x != s.multiplicity()) {
        EXPECT_TRUE(std::binary_search(app.begin(), app.end(), x)) << x;
      }
    }
  }
}

}  // namespace
}  // namespace numsg::oracle
