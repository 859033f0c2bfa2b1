#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace twlayout {

using Vertex = std::int32_t;

/// Undirected edge, normalised so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on the vertex set 0..n-1.
///
/// Adjacency lists are kept sorted, so neighbour iteration is in ascending id
/// order everywhere in the library. Self-loops and out-of-range endpoints are
/// rejected with BadParams; a repeated edge is ignored.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Returns false if the edge was already present.
  bool add_edge(Vertex a, Vertex b);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const Vertex> neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Induced subgraph together with the id translation in both directions.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id
};

/// `vertices` may be in any order; local ids follow that order.
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components, each sorted ascending, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// Breadth-first distances from `root`; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex root);

/// Smallest-id vertex among those of minimum degree in `among` (all vertices
/// when empty).
Vertex min_degree_vertex(const Graph& g, std::span<const Vertex> among = {});

}  // namespace twlayout
