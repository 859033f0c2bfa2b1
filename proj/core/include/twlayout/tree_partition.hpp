#pragma once

#include <string>
#include <vector>

#include "twlayout/graph.hpp"

namespace twlayout {

/// Rooted tree-partition. Node 0 is the root; parent[0] == -1.
///
/// parent_clique[x] holds the vertices of the parent bag that have a
/// neighbour in bag x (empty for the root). depth[x] is the distance of x
/// from the root in the bag tree.
struct TreePartition {
  std::vector<int> parent;
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::vector<Vertex>> parent_clique;
  std::vector<int> depth;

  std::size_t node_count() const noexcept { return bags.size(); }
  int width() const;
  /// node_of[v] for every vertex of an n-vertex graph; -1 if v is in no bag.
  std::vector<int> node_of(std::size_t n) const;
  /// Children lists in ascending node order.
  std::vector<std::vector<int>> children() const;
};

/// Tree-partition of a k-tree whose bags are the connected components of the
/// breadth-first layers from a minimum-degree vertex. Each non-root bag sees a
/// clique of its parent bag, each bag induces a connected (k-1)-tree, and the
/// width is at most max{1, k(Delta-1)}. Disconnected inputs get an empty root
/// bag with one subtree per component, in order of smallest vertex id.
///
/// Throws NotKTree if g is not chordal or has a clique larger than k+1.
TreePartition build_tree_partition(const Graph& g, int k);

struct TreePartitionReport {
  bool ok = false;
  bool structure_ok = false;       // parent array is a rooted tree, depths consistent
  bool partition_ok = false;       // bags disjoint and covering
  bool edges_ok = false;           // intra-bag or parent/child
  bool parent_cliques_ok = false;  // property (a), recomputed
  bool bags_ktree_ok = false;      // property (b): connected (k-1)-trees
  bool width_ok = false;
  int width = 0;
  long long width_bound = 0;
  std::string message;
};

/// max{1, k(Delta-1)}
long long tree_partition_width_bound(int k, std::size_t max_degree);

TreePartitionReport verify_tree_partition(const Graph& g, const TreePartition& tp, int k);

}  // namespace twlayout
