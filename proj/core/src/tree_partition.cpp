#include "twlayout/tree_partition.hpp"

#include <algorithm>
#include <numeric>

#include "twlayout/error.hpp"
#include "twlayout/ordering.hpp"

namespace twlayout {

int TreePartition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w);
}

std::vector<int> TreePartition::node_of(std::size_t n) const {
  std::vector<int> out(n, -1);
  for (std::size_t x = 0; x < bags.size(); ++x) {
    for (Vertex v : bags[x]) {
      if (v >= 0 && static_cast<std::size_t>(v) < n) out[static_cast<std::size_t>(v)] = static_cast<int>(x);
    }
  }
  return out;
}

std::vector<std::vector<int>> TreePartition::children() const {
  std::vector<std::vector<int>> out(parent.size());
  for (std::size_t x = 0; x < parent.size(); ++x) {
    if (parent[x] >= 0 && static_cast<std::size_t>(parent[x]) < parent.size()) out[static_cast<std::size_t>(parent[x])].push_back(static_cast<int>(x));
  }
  return out;
}

long long tree_partition_width_bound(int k, std::size_t max_degree) {
  return std::max<long long>(1, static_cast<long long>(k) * (static_cast<long long>(max_degree) - 1));
}

namespace {

// Partition of one connected component; node ids are appended to `tp` and the
// component's root gets parent `attach` at depth `base_depth`.
void partition_component(const Graph& g, const std::vector<Vertex>& comp, int k, int attach, int base_depth,
                         TreePartition& tp) {
  const Subgraph sub = induced_subgraph(g, comp);
  const Graph& h = sub.graph;
  KTreeOrdering peo;
  try {
    peo = ktree_peo(h);
  } catch (const LayoutError& e) {
    throw LayoutError(ErrorKind::NotKTree, e.what());
  }
  if (peo.k > k) {
    throw LayoutError(ErrorKind::NotKTree, "graph contains a clique on " + std::to_string(peo.k + 1) +
                                               " vertices; not a " + std::to_string(k) + "-tree");
  }
  const auto& depth = peo.order.depth;
  const std::size_t n = h.vertex_count();

  // Union-find over edges inside one breadth-first layer.
  std::vector<Vertex> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](Vertex x) {
    while (uf[static_cast<std::size_t>(x)] != x) {
      uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
      x = uf[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const Edge& e : h.edges()) {
    if (depth[static_cast<std::size_t>(e.u)] == depth[static_cast<std::size_t>(e.v)]) {
      const Vertex a = find(e.u), b = find(e.v);
      if (a != b) uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

  // Nodes are numbered in elimination order of their first vertex, so parents
  // precede children.
  std::vector<int> node_of_rep(n, -1);
  std::vector<int> node_of(n, -1);
  const int first_node = static_cast<int>(tp.bags.size());
  for (Vertex v : peo.order.sequence) {
    const Vertex rep = find(v);
    int& node = node_of_rep[static_cast<std::size_t>(rep)];
    if (node < 0) {
      node = static_cast<int>(tp.bags.size());
      tp.bags.emplace_back();
      tp.parent.push_back(-1);
      tp.parent_clique.emplace_back();
      tp.depth.push_back(base_depth + depth[static_cast<std::size_t>(v)]);
    }
    node_of[static_cast<std::size_t>(v)] = node;
    tp.bags[static_cast<std::size_t>(node)].push_back(sub.to_parent[static_cast<std::size_t>(v)]);
  }
  tp.parent[static_cast<std::size_t>(first_node)] = attach;

  for (std::size_t v = 0; v < n; ++v) {
    const int x = node_of[v];
    for (Vertex w : h.neighbours(static_cast<Vertex>(v))) {
      if (depth[static_cast<std::size_t>(w)] != depth[v] - 1) continue;
      const int y = node_of[static_cast<std::size_t>(w)];
      int& p = tp.parent[static_cast<std::size_t>(x)];
      if (p >= 0 && p != y) {
        throw LayoutError(ErrorKind::NotKTree, "a layer component sees two parent bags");
      }
      p = y;
      tp.parent_clique[static_cast<std::size_t>(x)].push_back(sub.to_parent[static_cast<std::size_t>(w)]);
    }
  }
  for (std::size_t x = static_cast<std::size_t>(first_node); x < tp.bags.size(); ++x) {
    auto& c = tp.parent_clique[x];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    std::sort(tp.bags[x].begin(), tp.bags[x].end());
    if (!is_clique(g, c)) throw LayoutError(ErrorKind::NotKTree, "parent vertices of a bag are not a clique");
  }
}

}  // namespace

TreePartition build_tree_partition(const Graph& g, int k) {
  if (k < 0) throw LayoutError(ErrorKind::BadParams, "k must be non-negative");
  TreePartition tp;
  const auto comps = connected_components(g);
  if (comps.size() == 1) {
    partition_component(g, comps.front(), k, -1, 0, tp);
    return tp;
  }
  tp.parent.push_back(-1);
  tp.bags.emplace_back();
  tp.parent_clique.emplace_back();
  tp.depth.push_back(0);
  for (const auto& comp : comps) partition_component(g, comp, k, 0, 1, tp);
  return tp;
}

TreePartitionReport verify_tree_partition(const Graph& g, const TreePartition& tp, int k) {
  TreePartitionReport r;
  const std::size_t n = g.vertex_count();
  const std::size_t nodes = tp.bags.size();
  auto fail = [&](const std::string& msg) {
    if (r.message.empty()) r.message = msg;
  };

  r.structure_ok = nodes > 0 && tp.parent.size() == nodes && tp.depth.size() == nodes &&
                   tp.parent_clique.size() == nodes && tp.parent[0] == -1 && tp.depth[0] == 0;
  if (!r.structure_ok) {
    fail("malformed tree-partition arrays");
    return r;
  }
  for (std::size_t x = 1; x < nodes && r.structure_ok; ++x) {
    const int p = tp.parent[x];
    if (p < 0 || static_cast<std::size_t>(p) >= nodes) {
      r.structure_ok = false;
      fail("node " + std::to_string(x) + " has no valid parent");
      break;
    }
    if (tp.depth[x] != tp.depth[static_cast<std::size_t>(p)] + 1) {
      r.structure_ok = false;
      fail("node " + std::to_string(x) + " is not one level below its parent");
    }
  }
  // Depth strictly increasing along parent links means no cycles; every
  // chain ends at the root because the root is the only parentless node.

  const auto node_of = tp.node_of(n);
  r.partition_ok = true;
  {
    std::vector<int> seen(n, 0);
    for (const auto& bag : tp.bags) {
      for (Vertex v : bag) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]++) {
          r.partition_ok = false;
          fail("bags overlap or contain invalid vertex " + std::to_string(v));
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v]) {
        r.partition_ok = false;
        fail("vertex " + std::to_string(v) + " is in no bag");
        break;
      }
    }
  }
  if (!r.partition_ok) return r;

  r.edges_ok = true;
  for (const Edge& e : g.edges()) {
    const int a = node_of[static_cast<std::size_t>(e.u)], b = node_of[static_cast<std::size_t>(e.v)];
    if (a == b || tp.parent[static_cast<std::size_t>(a)] == b || tp.parent[static_cast<std::size_t>(b)] == a) continue;
    r.edges_ok = false;
    fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " joins non-adjacent bags");
    break;
  }

  r.parent_cliques_ok = true;
  for (std::size_t x = 1; x < nodes; ++x) {
    const int p = tp.parent[x];
    std::vector<Vertex> seen_from_parent;
    for (Vertex v : tp.bags[x]) {
      for (Vertex w : g.neighbours(v)) {
        if (node_of[static_cast<std::size_t>(w)] == p) seen_from_parent.push_back(w);
      }
    }
    std::sort(seen_from_parent.begin(), seen_from_parent.end());
    seen_from_parent.erase(std::unique(seen_from_parent.begin(), seen_from_parent.end()), seen_from_parent.end());
    auto stored = tp.parent_clique[x];
    std::sort(stored.begin(), stored.end());
    if (stored != seen_from_parent || !is_clique(g, seen_from_parent)) {
      r.parent_cliques_ok = false;
      fail("parent vertices seen by bag " + std::to_string(x) + " are not the recorded clique");
      break;
    }
  }

  r.bags_ktree_ok = true;
  for (std::size_t x = 0; x < nodes; ++x) {
    if (tp.bags[x].empty()) {
      if (x != 0) {
        r.bags_ktree_ok = false;
        fail("non-root bag " + std::to_string(x) + " is empty");
      }
      continue;
    }
    const Subgraph sub = induced_subgraph(g, tp.bags[x]);
    bool good = false;
    try {
      good = ktree_peo(sub.graph).k <= std::max(0, k - 1);
    } catch (const LayoutError&) {
      good = false;
    }
    if (!good) {
      r.bags_ktree_ok = false;
      fail("bag " + std::to_string(x) + " is not a connected (k-1)-tree");
      break;
    }
  }

  r.width = tp.width();
  r.width_bound = tree_partition_width_bound(k, g.max_degree());
  r.width_ok = r.width <= r.width_bound;
  if (!r.width_ok) fail("width exceeds max{1, k(Delta-1)}");

  r.ok = r.structure_ok && r.partition_ok && r.edges_ok && r.parent_cliques_ok && r.bags_ktree_ok && r.width_ok;
  return r;
}

}  // namespace twlayout
