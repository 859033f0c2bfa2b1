#include "twlayout/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "twlayout/error.hpp"

namespace twlayout {

namespace {

int max_bag_width(const std::vector<std::vector<Vertex>>& bags) {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
};

}  // namespace

int TreeDecomposition::width() const { return max_bag_width(bags); }
int PathDecomposition::width() const { return max_bag_width(bags); }

TreeDecomposition PathDecomposition::as_tree() const {
  TreeDecomposition td{bags, {}};
  for (std::size_t i = 1; i < bags.size(); ++i) {
    td.tree_edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
  }
  return td;
}

DecompositionReport verify_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  DecompositionReport r;
  const std::size_t n = g.vertex_count();
  const std::size_t nodes = td.bags.size();

  r.tree_ok = true;
  UnionFind uf(nodes);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nodes || static_cast<std::size_t>(b) >= nodes ||
        !uf.unite(a, b)) {
      r.tree_ok = false;
      r.message = "bag tree has a cycle or an invalid node";
      break;
    }
  }
  if (r.tree_ok && nodes > 0 && td.tree_edges.size() != nodes - 1) {
    r.tree_ok = false;
    r.message = "bag tree is disconnected";
  }

  std::vector<std::vector<int>> occurrences(n);
  bool ids_ok = true;
  for (std::size_t x = 0; x < nodes; ++x) {
    for (Vertex v : td.bags[x]) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        ids_ok = false;
        continue;
      }
      occurrences[static_cast<std::size_t>(v)].push_back(static_cast<int>(x));
    }
  }
  r.cover_ok = ids_ok;
  for (std::size_t v = 0; v < n && r.cover_ok; ++v) {
    if (occurrences[v].empty()) {
      r.cover_ok = false;
      r.message = "vertex " + std::to_string(v) + " is in no bag";
    }
  }

  std::vector<std::set<Vertex>> bag_sets;
  bag_sets.reserve(nodes);
  for (const auto& b : td.bags) bag_sets.emplace_back(b.begin(), b.end());
  r.edges_ok = true;
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (int x : occurrences[static_cast<std::size_t>(e.u)]) {
      if (bag_sets[static_cast<std::size_t>(x)].count(e.v)) {
        found = true;
        break;
      }
    }
    if (!found) {
      r.edges_ok = false;
      if (r.message.empty()) r.message = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is in no bag";
      break;
    }
  }

  // The nodes holding v induce a connected subtree iff they span exactly
  // (#nodes - 1) tree edges, given the bag graph is a forest.
  r.connectivity_ok = r.tree_ok;
  if (r.tree_ok) {
    std::vector<int> count(n, 0);
    for (auto [a, b] : td.tree_edges) {
      for (Vertex v : bag_sets[static_cast<std::size_t>(a)]) {
        if (v >= 0 && static_cast<std::size_t>(v) < n && bag_sets[static_cast<std::size_t>(b)].count(v)) ++count[static_cast<std::size_t>(v)];
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::set<int> distinct(occurrences[v].begin(), occurrences[v].end());
      if (!distinct.empty() && count[v] != static_cast<int>(distinct.size()) - 1) {
        r.connectivity_ok = false;
        if (r.message.empty()) r.message = "bags containing vertex " + std::to_string(v) + " are not connected";
        break;
      }
    }
  }
  r.ok = r.tree_ok && r.cover_ok && r.edges_ok && r.connectivity_ok;
  return r;
}

DecompositionReport verify_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  return verify_tree_decomposition(g, pd.as_tree());
}

KTreeCompletion complete_to_ktree(const Graph& g, const TreeDecomposition& td) {
  const auto report = verify_tree_decomposition(g, td);
  if (!report.ok) throw LayoutError(ErrorKind::InvalidDecomposition, report.message);
  KTreeCompletion out{g, {}, std::max(0, td.width())};
  for (const auto& bag : td.bags) {
    for (std::size_t i = 0; i < bag.size(); ++i) {
      for (std::size_t j = i + 1; j < bag.size(); ++j) {
        if (out.graph.add_edge(bag[i], bag[j])) out.added_edges.emplace_back(bag[i], bag[j]);
      }
    }
  }
  // A bridge between two chordal components keeps the graph chordal and adds
  // no clique larger than an edge.
  if (out.k >= 1) {
    const auto comps = connected_components(out.graph);
    for (std::size_t c = 1; c < comps.size(); ++c) {
      out.graph.add_edge(comps[0].front(), comps[c].front());
      out.added_edges.emplace_back(comps[0].front(), comps[c].front());
    }
  }
  std::sort(out.added_edges.begin(), out.added_edges.end());
  return out;
}

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<std::set<Vertex>> fill(n);
  for (const Edge& e : g.edges()) {
    fill[static_cast<std::size_t>(e.u)].insert(e.v);
    fill[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  TreeDecomposition td;
  td.bags.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex w : fill[static_cast<std::size_t>(v)]) {
      if (pos[static_cast<std::size_t>(w)] > static_cast<int>(i)) later.push_back(w);
    }
    for (std::size_t a = 0; a < later.size(); ++a) {
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        fill[static_cast<std::size_t>(later[a])].insert(later[b]);
        fill[static_cast<std::size_t>(later[b])].insert(later[a]);
      }
    }
    td.bags[i] = later;
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    // Attach to the bag of the earliest-eliminated later neighbour; bags with
    // no later neighbour start a new subtree and are chained afterwards.
    if (!later.empty()) {
      int parent = static_cast<int>(n);
      for (Vertex w : later) parent = std::min(parent, pos[static_cast<std::size_t>(w)]);
      td.tree_edges.emplace_back(static_cast<int>(i), parent);
    }
  }
  int prev_root = -1;
  for (std::size_t i = 0; i < n; ++i) {
    bool has_later = false;
    for (Vertex w : fill[static_cast<std::size_t>(order[i])]) {
      if (pos[static_cast<std::size_t>(w)] > static_cast<int>(i)) has_later = true;
    }
    if (has_later) continue;
    if (prev_root >= 0) td.tree_edges.emplace_back(prev_root, static_cast<int>(i));
    prev_root = static_cast<int>(i);
  }
  return td;
}

std::vector<Vertex> min_degree_elimination(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::set<Vertex>> fill(n);
  for (const Edge& e : g.edges()) {
    fill[static_cast<std::size_t>(e.u)].insert(e.v);
    fill[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (std::size_t v = 0; v < n; ++v) queue.emplace(fill[v].size(), static_cast<Vertex>(v));
  std::vector<Vertex> order;
  order.reserve(n);
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    queue.erase(queue.begin());
    order.push_back(v);
    std::vector<Vertex> nb(fill[static_cast<std::size_t>(v)].begin(), fill[static_cast<std::size_t>(v)].end());
    for (Vertex w : nb) {
      queue.erase({fill[static_cast<std::size_t>(w)].size(), w});
      fill[static_cast<std::size_t>(w)].erase(v);
    }
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        fill[static_cast<std::size_t>(nb[a])].insert(nb[b]);
        fill[static_cast<std::size_t>(nb[b])].insert(nb[a]);
      }
    }
    for (Vertex w : nb) queue.emplace(fill[static_cast<std::size_t>(w)].size(), w);
  }
  return order;
}

PathDecomposition path_decomposition_from_ordering(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count();
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<int> last(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    last[v] = pos[v];
    for (Vertex w : g.neighbours(static_cast<Vertex>(v))) last[v] = std::max(last[v], pos[static_cast<std::size_t>(w)]);
  }
  PathDecomposition pd;
  pd.bags.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (last[static_cast<std::size_t>(order[j])] >= static_cast<int>(i)) pd.bags[i].push_back(order[j]);
    }
    pd.bags[i].push_back(order[i]);
    std::sort(pd.bags[i].begin(), pd.bags[i].end());
  }
  return pd;
}

}  // namespace twlayout
