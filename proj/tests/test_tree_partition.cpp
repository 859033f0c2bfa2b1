#include <gtest/gtest.h>

#include <algorithm>

#include "corpus.hpp"
#include "throws.hpp"
#include "twlayout/tree_partition.hpp"

using namespace twlayout;
using twtest::kind_of;
using twtest::make;

TEST(TreePartition, PathFromEndpoint) {
  const Graph g = make(Family::Path, 5);
  const TreePartition tp = build_tree_partition(g, 1);
  ASSERT_EQ(tp.node_count(), 5u);
  EXPECT_EQ(tp.width(), 1);
  EXPECT_EQ(tp.parent, (std::vector<int>{-1, 0, 1, 2, 3}));
  for (std::size_t x = 0; x < 5; ++x) EXPECT_EQ(tp.bags[x], (std::vector<Vertex>{static_cast<Vertex>(x)}));
  EXPECT_EQ(tp.depth, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(verify_tree_partition(g, tp, 1).ok);
}

TEST(TreePartition, WidthBoundOnRandomKTrees) {
  for (int k = 1; k <= 5; ++k) {
    for (std::uint64_t s = 1; s <= 6; ++s) {
      const Graph g = make(Family::RandomKTree, 300, k, s);
      const TreePartition tp = build_tree_partition(g, k);
      const auto rep = verify_tree_partition(g, tp, k);
      EXPECT_TRUE(rep.ok) << rep.message;
      EXPECT_TRUE(rep.parent_cliques_ok);
      EXPECT_TRUE(rep.bags_ktree_ok);
      EXPECT_LE(tp.width(), tree_partition_width_bound(k, g.max_degree()));
      EXPECT_EQ(rep.width_bound, tree_partition_width_bound(k, g.max_degree()));
    }
  }
  const Graph g = make(Family::RandomKTree, 200, 3, 11);
  EXPECT_LE(build_tree_partition(g, 3).width(), 3 * (static_cast<int>(g.max_degree()) - 1));
}

TEST(TreePartition, ParentCliquesSeeTheirChildren) {
  const Graph g = make(Family::RandomKTree, 150, 3, 4);
  const TreePartition tp = build_tree_partition(g, 3);
  const auto node = tp.node_of(g.vertex_count());
  for (std::size_t x = 1; x < tp.node_count(); ++x) {
    const auto& c = tp.parent_clique[x];
    EXPECT_TRUE(is_clique(g, c));
    for (Vertex v : c) EXPECT_EQ(node[static_cast<std::size_t>(v)], tp.parent[x]);
    EXPECT_EQ(tp.depth[x], tp.depth[static_cast<std::size_t>(tp.parent[x])] + 1);
  }
}

TEST(TreePartition, MutationsAreCaught) {
  const Graph g = make(Family::RandomKTree, 60, 2, 3);
  const TreePartition tp = build_tree_partition(g, 2);
  ASSERT_TRUE(verify_tree_partition(g, tp, 2).ok);

  // split a multi-vertex bag and hang the piece under the root: some edge now
  // joins non-adjacent nodes
  {
    TreePartition bad = tp;
    auto it = std::find_if(bad.bags.begin() + 1, bad.bags.end(), [](const auto& b) { return b.size() >= 2; });
    ASSERT_NE(it, bad.bags.end());
    const std::size_t x = static_cast<std::size_t>(it - bad.bags.begin());
    const Vertex moved = bad.bags[x].back();
    bad.bags[x].pop_back();
    bad.bags.push_back({moved});
    bad.parent.push_back(0);
    bad.parent_clique.push_back({});
    bad.depth.push_back(1);
    const auto rep = verify_tree_partition(g, bad, 2);
    EXPECT_FALSE(rep.ok);
    EXPECT_FALSE(rep.edges_ok);
  }
  // a parent-clique vertex removed from the parent bag
  {
    TreePartition bad = tp;
    std::size_t x = 1;
    while (bad.parent_clique[x].empty()) ++x;
    const Vertex v = bad.parent_clique[x].front();
    auto& pb = bad.bags[static_cast<std::size_t>(bad.parent[x])];
    pb.erase(std::find(pb.begin(), pb.end(), v));
    bad.bags[x].push_back(v);
    EXPECT_FALSE(verify_tree_partition(g, bad, 2).parent_cliques_ok);
  }
  // not a tree
  {
    TreePartition bad = tp;
    bad.parent[1] = static_cast<int>(bad.node_count()) - 1;
    EXPECT_FALSE(verify_tree_partition(g, bad, 2).structure_ok);
  }
}

TEST(TreePartition, RejectsNonKTrees) {
  EXPECT_EQ(kind_of([] { build_tree_partition(make(Family::Cycle, 5), 2); }), ErrorKind::NotKTree);
  EXPECT_EQ(kind_of([] { build_tree_partition(make(Family::Complete, 5), 3); }), ErrorKind::NotKTree);
}

TEST(TreePartition, DisconnectedGetsEmptyRoot) {
  const Graph g = twtest::from_edges(5, {{0, 1}, {2, 3}});
  const TreePartition tp = build_tree_partition(g, 1);
  EXPECT_TRUE(tp.bags[0].empty());
  EXPECT_TRUE(verify_tree_partition(g, tp, 1).ok);
}
