#include "twlayout/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "twlayout/error.hpp"

namespace twlayout {

std::vector<int> VertexOrdering::positions() const {
  std::vector<int> pos(sequence.size(), -1);
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    pos[static_cast<std::size_t>(sequence[i])] = static_cast<int>(i);
  }
  return pos;
}

bool VertexOrdering::is_permutation_of(std::size_t n) const {
  if (sequence.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : sequence) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

VertexOrdering lex_bfs(const Graph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  if (root < 0 || static_cast<std::size_t>(root) >= n) {
    throw LayoutError(ErrorKind::BadParams, "root out of range");
  }
  VertexOrdering out;
  out.depth.assign(n, -1);
  out.sequence.reserve(n);
  std::queue<Vertex> q;
  out.depth[static_cast<std::size_t>(root)] = 0;
  q.push(root);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    out.sequence.push_back(v);
    // Adjacency lists are sorted, so same-parent children enter in id order.
    for (Vertex w : g.neighbours(v)) {
      if (out.depth[static_cast<std::size_t>(w)] < 0) {
        out.depth[static_cast<std::size_t>(w)] = out.depth[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      }
    }
  }
  if (out.sequence.size() != n) {
    throw LayoutError(ErrorKind::DisconnectedGraph, "lex_bfs: graph is not connected");
  }
  return out;
}

std::vector<Vertex> lex_bfs_partition(const Graph& g, Vertex root) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order;
  if (n == 0) return order;
  order.reserve(n);

  // Unvisited vertices live in `arr` as consecutive slices; slice ranges are
  // half-open [start, end). Refinement moves neighbours of the visited vertex
  // into a new slice placed immediately before their old one.
  std::vector<Vertex> arr(n);
  std::iota(arr.begin(), arr.end(), 0);
  std::swap(arr[0], arr[static_cast<std::size_t>(root)]);
  std::sort(arr.begin() + 1, arr.end());
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[static_cast<std::size_t>(arr[i])] = i;

  std::vector<std::size_t> slice_start{0}, slice_end{n};
  std::vector<std::size_t> slice_of(n, 0);
  std::vector<std::size_t> split_into;  // per slice, the slice created this round
  std::vector<std::size_t> touched;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  split_into.push_back(kNone);

  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = arr[i];
    order.push_back(v);
    ++slice_start[slice_of[static_cast<std::size_t>(v)]];
    for (Vertex w : g.neighbours(v)) {
      const auto wi = static_cast<std::size_t>(w);
      if (pos[wi] <= i) continue;
      const std::size_t s = slice_of[wi];
      std::size_t t = split_into[s];
      if (t == kNone) {
        t = slice_start.size();
        slice_start.push_back(slice_start[s]);
        slice_end.push_back(slice_start[s]);
        split_into.push_back(kNone);
        split_into[s] = t;
        touched.push_back(s);
      }
      const std::size_t front = slice_start[s];
      const Vertex other = arr[front];
      std::swap(arr[front], arr[pos[wi]]);
      pos[static_cast<std::size_t>(other)] = pos[wi];
      pos[wi] = front;
      ++slice_start[s];
      slice_end[t] = slice_start[s];
      slice_of[wi] = t;
    }
    for (std::size_t s : touched) split_into[s] = kNone;
    touched.clear();
  }
  return order;
}

std::vector<std::vector<Vertex>> back_neighbourhoods(const Graph& g,
                                                     const std::vector<Vertex>& order) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::vector<Vertex>> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : g.neighbours(order[i])) {
      const int pw = pos[static_cast<std::size_t>(w)];
      if (pw >= 0 && pw < static_cast<int>(i)) out[i].push_back(w);
    }
  }
  return out;
}

namespace {

// Returns the index of the first vertex whose earlier neighbours are not a
// clique, or -1. Uses the classic parent test: the earlier neighbours of v
// minus their latest member p must all be adjacent to p.
int first_non_simplicial(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex parent = -1;
    for (Vertex w : g.neighbours(order[i])) {
      const int pw = pos[static_cast<std::size_t>(w)];
      if (pw < static_cast<int>(i) && (parent < 0 || pw > pos[static_cast<std::size_t>(parent)])) parent = w;
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbours(order[i])) {
      const int pw = pos[static_cast<std::size_t>(w)];
      if (pw < static_cast<int>(i) && w != parent && !g.has_edge(w, parent)) return static_cast<int>(i);
    }
  }
  return -1;
}

}  // namespace

KTreeOrdering ktree_peo(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  return ktree_peo(g, min_degree_vertex(g));
}

KTreeOrdering ktree_peo(const Graph& g, Vertex root) {
  KTreeOrdering out;
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;
  if (!is_connected(g)) throw LayoutError(ErrorKind::DisconnectedGraph, "ktree_peo: graph is not connected");
  out.order.sequence = lex_bfs_partition(g, root);
  if (first_non_simplicial(g, out.order.sequence) >= 0) {
    throw LayoutError(ErrorKind::NotChordal, "graph has a chordless cycle of length at least four");
  }
  out.order.depth = bfs_distances(g, root);
  for (const auto& c : back_neighbourhoods(g, out.order.sequence)) {
    out.k = std::max(out.k, static_cast<int>(c.size()));
  }
  return out;
}

KTreeOrderingReport verify_ktree_ordering(const Graph& g, const std::vector<Vertex>& order, int k) {
  KTreeOrderingReport r;
  const std::size_t n = g.vertex_count();
  VertexOrdering vo{order, {}};
  r.permutation = vo.is_permutation_of(n);
  if (!r.permutation) {
    r.message = "not a permutation of the vertices";
    return r;
  }
  if (n == 0) {
    r.ok = r.prefixes_breadth_first = r.back_neighbours_cliques = true;
    return r;
  }
  const auto depth = bfs_distances(g, order.front());
  const auto pos = vo.positions();
  r.prefixes_breadth_first = true;
  for (std::size_t i = 1; i < n; ++i) {
    const Vertex v = order[i];
    const int dv = depth[static_cast<std::size_t>(v)];
    if (dv < 0 || dv < depth[static_cast<std::size_t>(order[i - 1])]) {
      r.prefixes_breadth_first = false;
      r.message = "depth decreases at position " + std::to_string(i);
      break;
    }
    // An earlier neighbour one level up makes the prefix distance equal the
    // distance in the whole graph.
    bool has_parent = false;
    for (Vertex w : g.neighbours(v)) {
      if (pos[static_cast<std::size_t>(w)] < static_cast<int>(i) && depth[static_cast<std::size_t>(w)] == dv - 1) {
        has_parent = true;
        break;
      }
    }
    if (!has_parent) {
      r.prefixes_breadth_first = false;
      r.message = "vertex " + std::to_string(v) + " has no earlier neighbour one level up";
      break;
    }
  }
  r.back_neighbours_cliques = true;
  const auto backs = back_neighbourhoods(g, order);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = backs[i];
    r.max_back_clique = std::max(r.max_back_clique, static_cast<int>(c.size()));
    const bool size_ok = static_cast<int>(c.size()) <= k && (i == 0 || !c.empty());
    if (!size_ok || !is_clique(g, c)) {
      r.back_neighbours_cliques = false;
      if (r.message.empty()) r.message = "back-neighbourhood of vertex " + std::to_string(order[i]) + " is not a clique of size 1.." + std::to_string(k);
    }
  }
  r.ok = r.prefixes_breadth_first && r.back_neighbours_cliques;
  return r;
}

bool is_chordal(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    const Subgraph sub = induced_subgraph(g, comp);
    if (first_non_simplicial(sub.graph, lex_bfs_partition(sub.graph, 0)) >= 0) return false;
  }
  return true;
}

}  // namespace twlayout
