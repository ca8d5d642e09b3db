#include <gtest/gtest.h>

#include <set>

#include "cayley/tree.hpp"

namespace cayley {
namespace {

TEST(TreeSpec, Validation) {
  EXPECT_THROW(TreeSpec(1, Rooting::Half, 3), std::invalid_argument);
  EXPECT_THROW(TreeSpec(2, Rooting::Half, -1), std::invalid_argument);
  const TreeSpec full(3, Rooting::Full, 2);
  EXPECT_EQ(full.arity(0), 4);
  EXPECT_EQ(full.arity(1), 3);
  EXPECT_EQ(TreeSpec(3, Rooting::Half, 2).arity(0), 3);
}

TEST(SphereSize, Examples) {
  EXPECT_EQ(sphere_size(TreeSpec(2, Rooting::Full, 5), 3), 12u);
  EXPECT_EQ(sphere_size(TreeSpec(2, Rooting::Half, 5), 0), 1u);
  const TreeSpec half3(3, Rooting::Half, 4);
  EXPECT_EQ(sphere_size(half3, 2), 9u);
  std::uint64_t enumerated = 0;
  for ([[maybe_unused]] const auto& v : iterate_level(half3, 2)) ++enumerated;
  EXPECT_EQ(enumerated, 9u);
  EXPECT_THROW(sphere_size(half3, 5), std::out_of_range);
  EXPECT_THROW(sphere_size(half3, -1), std::out_of_range);
}

TEST(BallSize, Examples) {
  EXPECT_EQ(ball_size(TreeSpec(2, Rooting::Full, 4), 2), 10u);
  EXPECT_EQ(ball_size(TreeSpec(2, Rooting::Half, 4), 2), 7u);
  for (auto rooting : {Rooting::Half, Rooting::Full}) {
    EXPECT_EQ(ball_size(TreeSpec(5, rooting, 3), 0), 1u);
  }
  EXPECT_THROW(ball_size(TreeSpec(2, Rooting::Half, 2), 3), std::out_of_range);
  EXPECT_THROW(ball_size(TreeSpec(1000, Rooting::Half, 10), 10), std::overflow_error);
}

TEST(BallSize, ClosedFormsAndSphereSums) {
  for (int k : {2, 3, 4}) {
    std::uint64_t kn = 1;  // k^n
    for (int n = 0; n <= 12; ++n) {
      const TreeSpec half(k, Rooting::Half, 12);
      const TreeSpec full(k, Rooting::Full, 12);
      std::uint64_t sum_half = 0, sum_full = 0;
      for (int m = 0; m <= n; ++m) {
        sum_half += sphere_size(half, m);
        sum_full += sphere_size(full, m);
      }
      EXPECT_EQ(ball_size(half, n), sum_half);
      EXPECT_EQ(ball_size(full, n), sum_full);
      EXPECT_EQ(ball_size(half, n), (kn * k - 1) / (k - 1));
      EXPECT_EQ(ball_size(full, n), ((k + 1) * kn - 2) / (k - 1));
      if (n >= 1) {
        EXPECT_EQ(sphere_size(full, n), (k + 1) * kn / k);
      }
      kn *= k;
    }
  }
}

TEST(ParityCounts, Examples) {
  const TreeSpec full(2, Rooting::Full, 6);
  EXPECT_EQ(parity_counts(full, 2), (ParityCounts{7, 3}));
  EXPECT_EQ(parity_counts(full, 3), (ParityCounts{7, 15}));
  EXPECT_EQ(parity_counts(full, 0), (ParityCounts{1, 0}));
  EXPECT_THROW(parity_counts(TreeSpec(2, Rooting::Half, 3), 2), std::invalid_argument);
}

TEST(ParityCounts, ClosedFormsOverTwentyPairs) {
  int checked = 0;
  for (int k : {2, 3, 4, 5, 6}) {
    for (int m : {0, 1, 2, 3}) {
      const TreeSpec full(k, Rooting::Full, 2 * m + 1);
      std::uint64_t k2m = 1;
      for (int i = 0; i < 2 * m; ++i) k2m *= k;
      const auto even = parity_counts(full, 2 * m);
      const auto odd = parity_counts(full, 2 * m + 1);
      EXPECT_EQ(even.even, 1 + k * (k2m - 1) / (k - 1));
      EXPECT_EQ(odd.odd, (k2m * k * k - 1) / (k - 1));
      EXPECT_EQ(even.even + even.odd, ball_size(full, 2 * m));
      EXPECT_EQ(odd.even + odd.odd, ball_size(full, 2 * m + 1));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 20);
}

TEST(Iteration, CanonicalOrderAndChildren) {
  const TreeSpec half(2, Rooting::Half, 3);
  const TreeSpec full(2, Rooting::Full, 3);
  EXPECT_EQ(children(half, VertexId{}).size(), 2u);
  EXPECT_EQ(children(full, VertexId{}).size(), 3u);
  EXPECT_TRUE(children(half, VertexId({0, 1, 1})).empty());

  for (const auto& spec : {half, full, TreeSpec(3, Rooting::Full, 4)}) {
    for (int m = 0; m <= spec.depth(); ++m) {
      std::uint64_t index = 0;
      VertexId previous;
      for (const auto& v : iterate_level(spec, m)) {
        EXPECT_EQ(v.level(), m);
        EXPECT_EQ(level_index(spec, v), index);
        EXPECT_EQ(vertex_at(spec, m, index), v);
        if (index > 0) EXPECT_LT(previous, v);
        if (m > 0) EXPECT_EQ(v.parent().level(), m - 1);
        previous = v;
        ++index;
      }
      EXPECT_EQ(index, sphere_size(spec, m));
    }
  }
}

TEST(Iteration, PrefixStableAcrossDepths) {
  std::vector<VertexId> shallow, deep;
  for (const auto& v : iterate_level(TreeSpec(3, Rooting::Full, 2), 2)) shallow.push_back(v);
  for (const auto& v : iterate_level(TreeSpec(3, Rooting::Full, 7), 2)) deep.push_back(v);
  EXPECT_EQ(shallow, deep);
}

TEST(Iteration, ChildrenPartitionNextLevel) {
  const TreeSpec spec(3, Rooting::Full, 3);
  std::set<VertexId> from_children;
  for (const auto& v : iterate_level(spec, 1)) {
    for (const auto& c : children(spec, v)) {
      EXPECT_EQ(c.parent(), v);
      from_children.insert(c);
    }
  }
  std::set<VertexId> level2;
  for (const auto& v : iterate_level(spec, 2)) level2.insert(v);
  EXPECT_EQ(from_children, level2);
  EXPECT_THROW(VertexId{}.parent(), std::logic_error);
}

}  // namespace
}  // namespace cayley
