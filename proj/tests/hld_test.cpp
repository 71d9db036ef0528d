#include "treelabel/hld.hpp"

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace treelabel {
namespace {

Tree complete_binary(std::size_t n) {
  std::vector<NodeId> parent(n, kNoParent);
  for (std::size_t i = 1; i < n; ++i) parent[i] = static_cast<NodeId>((i - 1) / 2);
  return Tree(parent);
}

TEST(Decompose, PathIsOneHeavyPath) {
  const Tree t({kNoParent, 0, 1, 2, 3});
  const HldIndex idx(t);
  for (NodeId v = 0; v < 5; ++v) {
    ASSERT_EQ(idx.light_ancestors(v).size(), 1u);
    EXPECT_EQ(idx.light_ancestors(v)[0], 0u);
    EXPECT_EQ(idx.apex(v), 0u);
    EXPECT_EQ(idx.heavy_offset(v), v);
  }
  EXPECT_EQ(idx.heavy_path(0).size(), 5u);
}

TEST(Decompose, StarHeavyChildIsLowestId) {
  const Tree t({kNoParent, 0, 0, 0, 0});
  const HldIndex idx(t);
  EXPECT_EQ(idx.heavy_child(0), 1u);
  for (NodeId v = 2; v < 5; ++v) {
    const auto la = idx.light_ancestors(v);
    ASSERT_EQ(la.size(), 2u);
    EXPECT_EQ(la[0], 0u);
    EXPECT_EQ(la[1], v);
  }
}

TEST(Decompose, CompleteBinaryLightDepth) {
  const Tree t = complete_binary(15);
  const HldIndex idx(t);
  for (NodeId v = 0; v < 15; ++v) EXPECT_LE(idx.light_ancestors(v).size(), 4u);
}

TEST(Decompose, Invariants) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed * 53;
    const Tree t = testing::random_shuffled_tree(n, seed);
    const HldIndex idx(t);
    const auto depth = all_depths(t);

    // Heavy paths partition the nodes.
    std::size_t covered = 0;
    std::set<NodeId> seen;
    for (NodeId v = 0; v < n; ++v) {
      if (!idx.is_light(v)) continue;
      for (NodeId p : idx.heavy_path(v)) {
        ASSERT_TRUE(seen.insert(p).second);
        ++covered;
      }
    }
    ASSERT_EQ(covered, n);

    for (NodeId v = 0; v < n; ++v) {
      const auto la = idx.light_ancestors(v);
      ASSERT_EQ(la.front(), t.root());
      ASSERT_EQ(la.back(), idx.apex(v));
      for (std::size_t i = 0; i < la.size(); ++i) {
        // i-th (0-based) light ancestor roots at most n / 2^i nodes.
        ASSERT_LE(static_cast<std::uint64_t>(idx.subtree_size(la[i])) << i, n);
        ASSERT_TRUE(idx.is_ancestor(la[i], v));
        ASSERT_LT(depth[v] - depth[la[i]], (std::uint64_t{1} << ceil_log2(n, 1)) >> i);
      }
      ASSERT_EQ(depth[v], depth[idx.apex(v)] + idx.heavy_offset(v));
    }
  }
}

TEST(Decompose, HeavyChildTiesGoToSmallestId) {
  const Tree t({kNoParent, 0, 0, 1, 2});
  const HldIndex idx(t);
  EXPECT_EQ(idx.heavy_child(0), 1u);
}

TEST(LightCount, Examples) {
  const Tree t = complete_binary(15);
  const HldIndex idx(t);
  // The leftmost leaf 7 sits on the heavy chain 0-1-3-7; node 2 is light.
  EXPECT_EQ(light_count_to(idx, 7, 1), 1u);
  EXPECT_EQ(light_count_to(idx, 7, 0), 1u);
  EXPECT_EQ(light_count_to(idx, 14, 2), 2u);
  EXPECT_EQ(light_count_to(idx, 14, 14), 4u);
  EXPECT_EQ(light_count_to(idx, 0, 0), 1u);

  const Tree path({kNoParent, 0, 1, 2, 3});
  const HldIndex pidx(path);
  EXPECT_EQ(light_count_to(pidx, 4, 4), 1u);
}

TEST(LightCount, MatchesPointerWalk) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Tree t = testing::random_shuffled_tree(200, seed);
    const HldIndex idx(t);
    for (NodeId v = 0; v < t.size(); v += 7) {
      for (NodeId a = v;; a = t.parent(a)) {
        std::size_t walked = 0;
        for (NodeId b = a; b != kNoParent; b = t.parent(b)) walked += idx.is_light(b) ? 1 : 0;
        ASSERT_EQ(light_count_to(idx, v, a), walked);
        if (a == t.root()) break;
      }
    }
  }
}

TEST(LightCount, NonAncestorThrows) {
  const Tree t({kNoParent, 0, 0});
  const HldIndex idx(t);
  EXPECT_THROW(light_count_to(idx, 1, 2), std::invalid_argument);
}

}  // namespace
}  // namespace treelabel
