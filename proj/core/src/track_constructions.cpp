#include "twlayout/track_constructions.hpp"

#include <algorithm>
#include <numeric>

#include "twlayout/error.hpp"
#include "twlayout/generators.hpp"
#include "twlayout/ordering.hpp"
#include "twlayout/track_transforms.hpp"

namespace twlayout {

namespace {

// BFS order of every component (rooted at its smallest vertex) with depths.
std::pair<std::vector<Vertex>, std::vector<int>> forest_bfs(const Graph& forest) {
  if (!is_forest(forest)) throw LayoutError(ErrorKind::NotForest, "graph contains a cycle");
  const std::size_t n = forest.vertex_count();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<int> depth(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    if (depth[r] >= 0) continue;
    depth[r] = 0;
    std::size_t head = order.size();
    order.push_back(static_cast<Vertex>(r));
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (Vertex w : forest.neighbours(v)) {
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
          order.push_back(w);
        }
      }
    }
  }
  return {order, depth};
}

}  // namespace

TrackLayout tree_depth_layout(const Graph& forest) {
  auto [order, depth] = forest_bfs(forest);
  TrackLayout out;
  for (Vertex v : order) {
    const auto d = static_cast<std::size_t>(depth[static_cast<std::size_t>(v)]);
    if (out.tracks.size() <= d) out.tracks.resize(d + 1);
    out.tracks[d].push_back(v);
  }
  return out;
}

TrackLayout tree_3track(const Graph& forest) {
  auto [order, depth] = forest_bfs(forest);
  TrackLayout out;
  out.tracks.resize(3);
  for (Vertex v : order) out.tracks[static_cast<std::size_t>(depth[static_cast<std::size_t>(v)] % 3)].push_back(v);
  out.drop_empty_tracks();
  return out;
}

TrackLayout from_path_decomposition(const Graph& g, const PathDecomposition& pd) {
  const auto report = verify_path_decomposition(g, pd);
  if (!report.ok) throw LayoutError(ErrorKind::InvalidDecomposition, report.message);
  const std::size_t n = g.vertex_count();
  std::vector<int> left(n, -1), right(n, -1);
  for (std::size_t b = 0; b < pd.bags.size(); ++b) {
    for (Vertex v : pd.bags[b]) {
      const auto i = static_cast<std::size_t>(v);
      if (left[i] < 0) left[i] = static_cast<int>(b);
      right[i] = static_cast<int>(b);
    }
  }
  std::vector<Vertex> by_left(n);
  std::iota(by_left.begin(), by_left.end(), 0);
  std::stable_sort(by_left.begin(), by_left.end(), [&](Vertex a, Vertex b) {
    return left[static_cast<std::size_t>(a)] < left[static_cast<std::size_t>(b)];
  });
  TrackLayout out;
  std::vector<int> last_right;  // per colour
  for (Vertex v : by_left) {
    const int l = left[static_cast<std::size_t>(v)];
    std::size_t c = 0;
    while (c < last_right.size() && last_right[c] >= l) ++c;
    if (c == last_right.size()) {
      last_right.push_back(-1);
      out.tracks.emplace_back();
    }
    last_right[c] = right[static_cast<std::size_t>(v)];
    out.tracks[c].push_back(v);
  }
  return out;
}

TrackLayout from_tree_partition(const Graph& g, const TreePartition& tp) {
  const auto report = verify_tree_partition(g, tp, static_cast<int>(g.vertex_count()));
  if (!report.structure_ok || !report.partition_ok || !report.edges_ok) {
    throw LayoutError(ErrorKind::InvalidTreePartition, report.message);
  }
  const std::size_t w = static_cast<std::size_t>(std::max(1, tp.width()));
  // BFS over the bag tree; children in node order.
  const auto children = tp.children();
  std::vector<int> order;
  order.reserve(tp.node_count());
  if (tp.node_count() > 0) order.push_back(0);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int c : children[static_cast<std::size_t>(order[head])]) order.push_back(c);
  }
  TrackLayout out;
  out.tracks.resize(3 * w);
  for (int x : order) {
    const auto base = static_cast<std::size_t>(tp.depth[static_cast<std::size_t>(x)] % 3) * w;
    auto bag = tp.bags[static_cast<std::size_t>(x)];
    std::sort(bag.begin(), bag.end());
    for (std::size_t j = 0; j < bag.size(); ++j) out.tracks[base + j].push_back(bag[j]);
  }
  out.drop_empty_tracks();
  return out;
}

TrackLayout grid_diagonal_layout(int rows, int cols) {
  if (rows < 1 || cols < 1) throw LayoutError(ErrorKind::BadParams, "grid needs rows, cols >= 1");
  TrackLayout out;
  out.tracks.resize(static_cast<std::size_t>(rows + cols - 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) out.tracks[static_cast<std::size_t>(r + c)].push_back(r * cols + c);
  }
  return out;
}

TrackLayout grid_3track(int rows, int cols) { return wrap_modulo(grid_diagonal_layout(rows, cols), 3); }

namespace {

// Places G_k with vertex ids starting at `offset` onto tracks first..first+T_k-1.
void place_gk(int k, Vertex offset, std::size_t first, TrackLayout& out) {
  if (k == 0) {
    out.tracks[first].push_back(offset);
    return;
  }
  const int mid = gk_middle_count(k);
  const auto sub = static_cast<Vertex>(*gk_vertex_count(k - 1));
  for (int i = 0; i < k; ++i) out.tracks[first + static_cast<std::size_t>(i)].push_back(offset + i);
  for (int j = 0; j < mid; ++j) out.tracks[first + static_cast<std::size_t>(k)].push_back(offset + k + j);
  for (int j = 0; j < mid; ++j) place_gk(k - 1, offset + k + mid + j * sub, first + static_cast<std::size_t>(k) + 1, out);
}

}  // namespace

TrackLayout gk_layout(int k, std::size_t vertex_budget) {
  if (k < 0) throw LayoutError(ErrorKind::BadParams, "gk: k must be non-negative");
  const auto size = gk_vertex_count(k);
  if (!size || *size > vertex_budget) {
    throw LayoutError(ErrorKind::ResourceLimit, "G_" + std::to_string(k) + " exceeds the vertex budget");
  }
  TrackLayout out;
  out.tracks.resize(static_cast<std::size_t>(gk_track_count(k)));
  place_gk(k, 0, 0, out);
  return out;
}

}  // namespace twlayout
