#include "twlayout/json_io.hpp"

#include <algorithm>

#include "twlayout/error.hpp"

namespace twlayout::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw LayoutError(ErrorKind::BadParams, "malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

json edge_list(std::span<const Edge> edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::vector<Edge> edges_from(const json& arr) {
  std::vector<Edge> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) bad("edge must be a pair");
    out.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return out;
}

json ordered_edges(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  return edge_list(edges);
}

std::string witness_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

}  // namespace

json to_json(const Graph& g) { return {{"n", g.vertex_count()}, {"edges", edge_list(g.edges())}}; }

Graph graph_from_json(const json& j) {
  return guarded("graph", [&] {
    const auto n = field(j, "n").get<std::int64_t>();
    if (n < 0) bad("negative n");
    Graph g(static_cast<std::size_t>(n));
    for (const Edge& e : edges_from(field(j, "edges"))) g.add_edge(e.u, e.v);
    return g;
  });
}

json to_json(const TrackLayout& l) {
  return {{"mode", l.mode == TrackMode::Proper ? "proper" : "improper"}, {"tracks", l.tracks}};
}

TrackLayout track_layout_from_json(const json& j) {
  return guarded("track layout", [&] {
    TrackLayout l;
    const auto mode = j.value("mode", std::string("proper"));
    if (mode == "proper") {
      l.mode = TrackMode::Proper;
    } else if (mode == "improper") {
      l.mode = TrackMode::Improper;
    } else {
      bad("mode must be proper or improper");
    }
    l.tracks = field(j, "tracks").get<std::vector<std::vector<Vertex>>>();
    return l;
  });
}

json to_json(const QueueLayout& q) {
  json queues = json::array();
  for (const auto& page : q.queues) queues.push_back(ordered_edges(page));
  return {{"order", q.order}, {"queues", queues}};
}

QueueLayout queue_layout_from_json(const json& j) {
  return guarded("queue layout", [&] {
    QueueLayout q;
    q.order = field(j, "order").get<std::vector<Vertex>>();
    for (const auto& page : field(j, "queues")) q.queues.push_back(edges_from(page));
    return q;
  });
}

json to_json(const StackLayout& s) {
  json stacks = json::array();
  for (const auto& page : s.stacks) stacks.push_back(ordered_edges(page));
  return {{"order", s.order}, {"stacks", stacks}};
}

StackLayout stack_layout_from_json(const json& j) {
  return guarded("stack layout", [&] {
    StackLayout s;
    s.order = field(j, "order").get<std::vector<Vertex>>();
    for (const auto& page : field(j, "stacks")) s.stacks.push_back(edges_from(page));
    return s;
  });
}

json to_json(const TreePartition& tp) {
  return {{"parent", tp.parent}, {"bags", tp.bags}, {"parent_clique", tp.parent_clique}};
}

TreePartition tree_partition_from_json(const json& j) {
  return guarded("tree partition", [&] {
    TreePartition tp;
    tp.parent = field(j, "parent").get<std::vector<int>>();
    tp.bags = field(j, "bags").get<std::vector<std::vector<Vertex>>>();
    tp.parent_clique = j.contains("parent_clique") ? j.at("parent_clique").get<std::vector<std::vector<Vertex>>>()
                                                   : std::vector<std::vector<Vertex>>(tp.bags.size());
    const std::size_t m = tp.bags.size();
    if (tp.parent.size() != m || tp.parent_clique.size() != m) bad("parent, bags and parent_clique differ in length");
    tp.depth.assign(m, -1);
    for (std::size_t x = 0; x < m; ++x) {
      // Walk up until a known depth; a cycle or bad index leaves -1.
      std::vector<std::size_t> path;
      std::size_t cur = x;
      while (tp.depth[cur] < 0 && path.size() <= m) {
        path.push_back(cur);
        const int p = tp.parent[cur];
        if (p < 0) {
          tp.depth[cur] = 0;
          path.pop_back();
          break;
        }
        if (static_cast<std::size_t>(p) >= m) break;
        cur = static_cast<std::size_t>(p);
      }
      if (tp.depth[cur] < 0) continue;
      for (auto it = path.rbegin(); it != path.rend(); ++it) {
        tp.depth[*it] = tp.depth[static_cast<std::size_t>(tp.parent[*it])] + 1;
      }
    }
    return tp;
  });
}

json to_json(const PathDecomposition& pd) { return {{"bags", pd.bags}}; }

PathDecomposition path_decomposition_from_json(const json& j) {
  return guarded("path decomposition", [&] {
    return PathDecomposition{field(j, "bags").get<std::vector<std::vector<Vertex>>>()};
  });
}

json to_json(const TreeDecomposition& td) {
  json edges = json::array();
  for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
  return {{"bags", td.bags}, {"tree_edges", edges}};
}

TreeDecomposition tree_decomposition_from_json(const json& j) {
  return guarded("tree decomposition", [&] {
    TreeDecomposition td;
    td.bags = field(j, "bags").get<std::vector<std::vector<Vertex>>>();
    for (const auto& e : field(j, "tree_edges")) td.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return td;
  });
}

json to_json(const Colouring& c) { return {{"colour", c.colour}, {"colour_count", c.colour_count}}; }

Colouring colouring_from_json(const json& j) {
  return guarded("colouring", [&] {
    Colouring c;
    c.colour = field(j, "colour").get<std::vector<int>>();
    c.colour_count = j.contains("colour_count") ? j.at("colour_count").get<int>()
                                                : (c.colour.empty() ? 0 : *std::max_element(c.colour.begin(), c.colour.end()) + 1);
    return c;
  });
}

json to_json(const Drawing3D& d) {
  const Point o = d.min_corner();
  json pts = json::array();
  for (const Point& p : d.translated_to_origin().points) pts.push_back({p.x, p.y, p.z});
  json out = {{"points", pts}, {"origin", {o.x, o.y, o.z}}};
  if (d.box) out["box"] = {d.box->x, d.box->y, d.box->z};
  return out;
}

Drawing3D drawing_from_json(const json& j) {
  return guarded("drawing", [&] {
    Drawing3D d;
    Point o;
    if (j.contains("origin")) {
      const auto& a = j.at("origin");
      o = {a.at(0).get<std::int64_t>(), a.at(1).get<std::int64_t>(), a.at(2).get<std::int64_t>()};
    }
    for (const auto& p : field(j, "points")) {
      if (!p.is_array() || p.size() != 3) bad("point must have three coordinates");
      d.points.push_back({p[0].get<std::int64_t>() + o.x, p[1].get<std::int64_t>() + o.y, p[2].get<std::int64_t>() + o.z});
    }
    if (j.contains("box")) {
      const auto& b = j.at("box");
      d.box = Box{b.at(0).get<std::int64_t>(), b.at(1).get<std::int64_t>(), b.at(2).get<std::int64_t>()};
    }
    return d;
  });
}

json to_json(const TrackLayoutReport& r) {
  json out = {{"ok", r.ok},
              {"assignment_ok", r.assignment_ok},
              {"mode_ok", r.mode_ok},
              {"x_crossings", r.x_crossings},
              {"tracks", r.tracks},
              {"max_span", r.max_span},
              {"message", r.message}};
  if (r.witness) out["witness"] = {witness_text(r.witness->first), witness_text(r.witness->second)};
  return out;
}

json to_json(const LinearLayoutReport& r) {
  json out = {{"ok", r.ok},       {"order_ok", r.order_ok}, {"edges_ok", r.edges_ok},
              {"pages_ok", r.pages_ok}, {"pages", r.pages},   {"message", r.message}};
  if (r.witness) out["witness"] = {witness_text(r.witness->first), witness_text(r.witness->second)};
  return out;
}

json to_json(const DrawingReport& r) {
  return {{"ok", r.ok},
          {"distinct_ok", r.distinct_ok},
          {"vertex_on_edge_ok", r.vertex_on_edge_ok},
          {"crossings", r.crossings},
          {"edge_bound_ok", r.edge_bound_ok},
          {"box_ok", r.box_ok},
          {"extents", {r.extents.x, r.extents.y, r.extents.z}},
          {"message", r.message}};
}

json to_json(const TreePartitionReport& r) {
  return {{"ok", r.ok},
          {"structure_ok", r.structure_ok},
          {"partition_ok", r.partition_ok},
          {"edges_ok", r.edges_ok},
          {"parent_cliques_ok", r.parent_cliques_ok},
          {"bags_ktree_ok", r.bags_ktree_ok},
          {"width_ok", r.width_ok},
          {"width", r.width},
          {"width_bound", r.width_bound},
          {"message", r.message}};
}

json to_json(const DecompositionReport& r) {
  return {{"ok", r.ok},           {"tree_ok", r.tree_ok},
          {"cover_ok", r.cover_ok}, {"edges_ok", r.edges_ok},
          {"connectivity_ok", r.connectivity_ok}, {"message", r.message}};
}

json to_json(const AcyclicColouringReport& r) {
  return {{"ok", r.ok},
          {"proper", r.proper},
          {"acyclic", r.acyclic},
          {"colour_count", r.colour_count},
          {"witness", r.witness},
          {"message", r.message}};
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace twlayout::io
