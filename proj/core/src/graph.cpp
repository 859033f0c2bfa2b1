#include "twlayout/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "twlayout/error.hpp"

namespace twlayout {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::NotKTree: return "NotKTree";
    case ErrorKind::NotPEO: return "NotPEO";
    case ErrorKind::NotForest: return "NotForest";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::NotAcyclic: return "NotAcyclic";
    case ErrorKind::NotSameCover: return "NotSameCover";
    case ErrorKind::InconsistentOrder: return "InconsistentOrder";
    case ErrorKind::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorKind::InvalidTreePartition: return "InvalidTreePartition";
    case ErrorKind::InvalidDrawing: return "InvalidDrawing";
    case ErrorKind::NoSuchLayout: return "NoSuchLayout";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

bool Graph::add_edge(Vertex a, Vertex b) {
  const auto n = static_cast<Vertex>(adj_.size());
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw LayoutError(ErrorKind::BadParams, "edge endpoint out of range: " + std::to_string(a) +
                                                "-" + std::to_string(b));
  }
  if (a == b) throw LayoutError(ErrorKind::BadParams, "self-loop at " + std::to_string(a));
  auto& la = adj_[static_cast<std::size_t>(a)];
  auto it = std::lower_bound(la.begin(), la.end(), b);
  if (it != la.end() && *it == b) return false;
  la.insert(it, b);
  auto& lb = adj_[static_cast<std::size_t>(b)];
  lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
  ++m_;
  return true;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& l : adj_) best = std::max(best, l.size());
  return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  const auto n = static_cast<Vertex>(adj_.size());
  if (a < 0 || b < 0 || a >= n || b >= n) return false;
  const auto& la = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(la.begin(), la.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
  }
  Subgraph out{Graph(vertices.size()), {vertices.begin(), vertices.end()}};
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbours(vertices[i])) {
      const Vertex j = local[static_cast<std::size_t>(w)];
      if (j > static_cast<Vertex>(i)) out.graph.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    comps.emplace_back();
    auto& comp = comps.back();
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == g.vertex_count();
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, Vertex root) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[static_cast<std::size_t>(root)] = 0;
  q.push(root);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbours(v)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

Vertex min_degree_vertex(const Graph& g, std::span<const Vertex> among) {
  Vertex best = -1;
  auto consider = [&](Vertex v) {
    if (best < 0 || g.degree(v) < g.degree(best) || (g.degree(v) == g.degree(best) && v < best)) {
      best = v;
    }
  };
  if (among.empty()) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) consider(static_cast<Vertex>(v));
  } else {
    for (Vertex v : among) consider(v);
  }
  return best;
}

}  // namespace twlayout
