#pragma once

#include <string>
#include <vector>

#include "twlayout/graph.hpp"

namespace twlayout {

/// A permutation of the vertices, optionally carrying breadth-first depths
/// indexed by vertex id.
struct VertexOrdering {
  std::vector<Vertex> sequence;
  std::vector<int> depth;

  /// position[v] = index of v in `sequence`.
  std::vector<int> positions() const;
  bool is_permutation_of(std::size_t n) const;
};

/// Breadth-first ordering from `root` in which vertices at depth d follow the
/// order of their parents at depth d-1, and children of the same parent appear
/// in ascending id. Throws DisconnectedGraph if some vertex is unreachable.
VertexOrdering lex_bfs(const Graph& g, Vertex root);

/// Rose-Tarjan-Lueker lexicographic BFS by partition refinement. On a chordal
/// graph every vertex's earlier neighbours form a clique. Visits all
/// components; no depth map.
std::vector<Vertex> lex_bfs_partition(const Graph& g, Vertex root);

struct KTreeOrdering {
  int k = 0;
  VertexOrdering order;
};

/// Elimination ordering of a connected chordal graph rooted at a minimum-degree
/// vertex: every prefix is connected and breadth-first, and the earlier
/// neighbours of each vertex form a clique. `k` is the largest such clique,
/// i.e. the smallest k for which the graph is a k-tree.
///
/// Throws DisconnectedGraph or NotChordal.
KTreeOrdering ktree_peo(const Graph& g);

/// Same as ktree_peo but with a caller-chosen first vertex.
KTreeOrdering ktree_peo(const Graph& g, Vertex root);

struct KTreeOrderingReport {
  bool ok = false;
  bool permutation = false;
  bool prefixes_breadth_first = false;
  bool back_neighbours_cliques = false;
  int max_back_clique = 0;
  std::string message;
};

/// Checks that `order` is connected-prefix breadth-first and that each vertex's
/// earlier neighbours form a clique of size at most k (and at least one, after
/// the first vertex).
KTreeOrderingReport verify_ktree_ordering(const Graph& g, const std::vector<Vertex>& order, int k);

/// Earlier neighbours of order[i], i.e. the back-clique C_i.
std::vector<std::vector<Vertex>> back_neighbourhoods(const Graph& g,
                                                     const std::vector<Vertex>& order);

/// True iff the graph is chordal (every component is checked).
bool is_chordal(const Graph& g);

}  // namespace twlayout
