#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twlayout/graph.hpp"

namespace twlayout {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree_edges;

  /// Largest bag size minus one; -1 for no bags.
  int width() const;
};

/// A tree decomposition whose tree is the path bag[0] - bag[1] - ...
struct PathDecomposition {
  std::vector<std::vector<Vertex>> bags;

  int width() const;
  TreeDecomposition as_tree() const;
};

struct DecompositionReport {
  bool ok = false;
  bool tree_ok = false;        // bag tree is a tree (or forest for empty input)
  bool cover_ok = false;       // every vertex in some bag
  bool edges_ok = false;       // every edge inside some bag
  bool connectivity_ok = false;  // bags containing each vertex are connected
  std::string message;
};

DecompositionReport verify_tree_decomposition(const Graph& g, const TreeDecomposition& td);
DecompositionReport verify_path_decomposition(const Graph& g, const PathDecomposition& pd);

struct KTreeCompletion {
  Graph graph;
  std::vector<Edge> added_edges;
  int k = 0;
};

/// Turns every bag into a clique (and links components when k >= 1), giving
/// a connected k-tree that contains g, with k the decomposition width.
/// Throws InvalidDecomposition.
KTreeCompletion complete_to_ktree(const Graph& g, const TreeDecomposition& td);

/// Tree decomposition read off an elimination ordering: eliminating v creates
/// the bag {v} plus its not-yet-eliminated neighbours in the filled graph.
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order);

/// Greedy minimum-degree elimination ordering; a cheap upper bound only.
std::vector<Vertex> min_degree_elimination(const Graph& g);

/// Path decomposition from a linear ordering: bag i holds order[i] and every
/// earlier vertex with a neighbour at position >= i. Width equals the vertex
/// separation of the ordering.
PathDecomposition path_decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order);

}  // namespace twlayout
