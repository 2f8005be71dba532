#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "numsg/explorer.hpp"
#include "numsg/known_counts.hpp"
#include "numsg/oracle.hpp"
#include "test_support.hpp"

namespace numsg {
namespace {

using Counts = std::vector<std::uint64_t>;

Counts as_vector(const GenusCounts& c) { return {c.values().begin(), c.values().end()}; }

TEST(Count, FirstLayers) {
  EXPECT_EQ(as_vector(count(GenusBound(5))), (Counts{1, 1, 2, 4, 7, 12}));
  EXPECT_EQ(as_vector(count(GenusBound(0))), Counts{1});
}

TEST(Count, MatchesPublishedValuesToTwenty) {
  const auto c = count(GenusBound(20));
  for (unsigned g = 0; g <= 20; ++g) EXPECT_EQ(c[g], kKnownCounts[g]) << g;
}

TEST(Count, ScalarAndVectorKernelsAgree) {
  EXPECT_EQ(count<kernel::ScalarKernel>(GenusBound(18)), count<kernel::VectorKernel>(GenusBound(18)));
}

TEST(CountFrom, WholeTree) {
  const GenusBound bound(10);
  EXPECT_EQ(count_from(root(bound), bound), count(bound));
}

TEST(CountFrom, LeafAtTheBound) {
  const GenusBound bound(3);
  const auto s = testing::reach({1, 2, 4}, bound);
  EXPECT_EQ(as_vector(count_from(s, bound)), (Counts{0, 0, 0, 1}));
}

TEST(CountFrom, TwoFiveSpine) {
  const GenusBound bound(4);
  const auto s = testing::reach({1, 3}, bound);  // <2,5>
  EXPECT_EQ(as_vector(count_from(s, bound)), (Counts{0, 0, 1, 1, 1}));
}

TEST(CountFrom, RejectsMismatchedRoots) {
  EXPECT_THROW(count_from(root(GenusBound(4)), GenusBound(5)), bound_error);
}

TEST(Walk, FirstThreeLayers) {
  std::vector<std::vector<unsigned>> seen;
  walk(GenusBound(2), [&](const Semigroup& s) { seen.push_back(gaps(s)); });
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<std::vector<unsigned>>{{}, {1}, {1, 2}, {1, 3}}));
}

TEST(Walk, BoundZeroVisitsOnlyTheRoot) {
  int visits = 0;
  walk(GenusBound(0), [&](const Semigroup& s) {
    ++visits;
    EXPECT_EQ(s.genus(), 0u);
  });
  EXPECT_EQ(visits, 1);
}

TEST(Walk, TallyReproducesCountAndOracle) {
  const GenusBound bound(12);
  GenusCounts tally(bound);
  std::uint64_t visits = 0;
  walk(bound, [&](const Semigroup& s) {
    tally.tally(s.genus());
    ++visits;
  });
  EXPECT_EQ(tally, count(bound));
  const auto naive = oracle::naive_enumerate(12);
  for (unsigned g = 0; g <= 12; ++g) EXPECT_EQ(tally[g], naive[g].size());

  std::uint64_t total = 0;
  for (auto n : tally.values()) total += n;
  EXPECT_EQ(total, visits);
}

TEST(Walk, VisitorFailureAbortsTheWalk) {
  int visits = 0;
  EXPECT_THROW(walk(GenusBound(10),
                    [&](const Semigroup&) {
                      if (++visits == 5) throw std::runtime_error("stop");
                    }),
               std::runtime_error);
  EXPECT_EQ(visits, 5);
}

TEST(Walk, SonsAreGeneratedInIncreasingOrder) {
  // Pushed in increasing x, so siblings pop in decreasing x.
  const GenusBound bound(2);
  std::vector<std::vector<unsigned>> order;
  walk(bound, [&](const Semigroup& s) { order.push_back(gaps(s)); });
  EXPECT_EQ(order, (std::vector<std::vector<unsigned>>{{}, {1}, {1, 3}, {1, 2}}));
}

std::vector<unsigned> parent_gaps(const Semigroup& s) {
  auto g = gaps(s);
  g.pop_back();
  return g;
}

TEST(Walk, StackDisciplineAndBound) {
  for (unsigned G : {3u, 8u, 14u}) {
    const GenusBound bound(G);
    std::size_t peak = 0;
    walk_from(root(bound), bound, [](const Semigroup&) {},
              [&](std::span<const Semigroup> stack) {
                peak = std::max(peak, stack.size());
                for (std::size_t i = 1; i < stack.size(); ++i) {
                  ASSERT_LE(stack[i - 1].genus(), stack[i].genus());
                  if (stack[i - 1].genus() == stack[i].genus()) {
                    ASSERT_EQ(parent_gaps(stack[i - 1]), parent_gaps(stack[i]));
                  }
                }
              });
    EXPECT_LE(peak, static_cast<std::size_t>(G) * (G + 1) / 2) << "G = " << G;
  }
}

TEST(GenusCounts, DetectsOverflow) {
  const GenusBound bound(1);
  const auto max = std::numeric_limits<std::uint64_t>::max();
  GenusCounts full(bound, {max, 0});
  EXPECT_THROW(full.tally(0), overflow_error);
  GenusCounts one(bound, {1, 0});
  EXPECT_THROW(full += one, overflow_error);
  EXPECT_THROW(GenusCounts(bound, {1}), bound_error);
  GenusCounts other(GenusBound(2));
  EXPECT_THROW(one += other, bound_error);
}

}  // namespace
}  // namespace numsg
