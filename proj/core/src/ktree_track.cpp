#include "twlayout/ktree_track.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "twlayout/error.hpp"
#include "twlayout/ordering.hpp"
#include "twlayout/tree_partition.hpp"

namespace twlayout {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a == kSat || b == kSat || a > kSat / b) return kSat;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSat - b ? kSat : a + b; }

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e && r != kSat; ++i) r = sat_mul(r, base);
  return r;
}

// 4^k, saturating; only small k are meaningful here.
std::uint64_t pow4(int k) { return sat_pow(4, static_cast<std::uint64_t>(k)); }

struct LevelContext {
  std::map<std::vector<int>, int> cover_sets;        // covered track set -> alpha
  std::map<std::tuple<int, int, int>, int> track_ids;  // (d mod 3, alpha, j) -> id
  int track_count = 0;
};

int cover_index(LevelContext& ctx, std::vector<int> set) {
  auto [it, inserted] = ctx.cover_sets.try_emplace(std::move(set), static_cast<int>(ctx.cover_sets.size()));
  return it->second;
}

// Tracks are indexed by the level's canonical ids; some may be empty.
TrackLayout layout_level(const Graph& h, int level, std::vector<LevelContext>& ctx) {
  const std::size_t n = h.vertex_count();
  TrackLayout out;
  if (n == 0) {
    out.tracks.resize(static_cast<std::size_t>(ctx[static_cast<std::size_t>(level)].track_count));
    return out;
  }
  if (level == 0) {
    if (h.edge_count() != 0) throw LayoutError(ErrorKind::NotKTree, "a 0-tree has no edges");
    auto& c = ctx[0];
    if (c.track_count == 0) c.track_count = 1;
    out.tracks.resize(1);
    out.tracks[0].resize(n);
    std::iota(out.tracks[0].begin(), out.tracks[0].end(), 0);
    return out;
  }

  const TreePartition tp = build_tree_partition(h, level);
  const std::size_t nodes = tp.node_count();
  auto& below = ctx[static_cast<std::size_t>(level - 1)];

  // Layout of every bag, plus the local index of each vertex in its bag.
  std::vector<TrackLayout> bag_layout(nodes);
  std::vector<int> local(n, -1);
  std::vector<std::vector<Vertex>> bags(nodes);
  for (std::size_t x = 0; x < nodes; ++x) {
    bags[x] = tp.bags[x];
    std::sort(bags[x].begin(), bags[x].end());
    for (std::size_t i = 0; i < bags[x].size(); ++i) local[static_cast<std::size_t>(bags[x][i])] = static_cast<int>(i);
    const Subgraph sub = induced_subgraph(h, bags[x]);
    bag_layout[x] = layout_level(sub.graph, level - 1, ctx);
  }
  std::vector<TrackIndex> bag_index;
  bag_index.reserve(nodes);
  for (std::size_t x = 0; x < nodes; ++x) bag_index.emplace_back(bag_layout[x], bags[x].size());

  // alpha(x): index of the track set covered by the parent clique.
  std::vector<int> alpha(nodes, 0);
  std::vector<std::vector<Vertex>> parent_clique_local(nodes);
  for (std::size_t x = 1; x < nodes; ++x) {
    const auto& clique = tp.parent_clique[x];
    if (clique.empty()) continue;
    const auto p = static_cast<std::size_t>(tp.parent[x]);
    std::vector<int> covered;
    for (Vertex v : clique) {
      const Vertex lv = local[static_cast<std::size_t>(v)];
      parent_clique_local[x].push_back(lv);
      covered.push_back(bag_index[p].track[static_cast<std::size_t>(lv)]);
    }
    std::sort(covered.begin(), covered.end());
    alpha[x] = cover_index(below, std::move(covered));
  }

  // Order the nodes of each depth: by parent rank, then by a nice order of
  // the parent cliques among siblings with the same alpha.
  const auto children = tp.children();
  std::vector<int> sibling_rank(nodes, 0);
  for (std::size_t p = 0; p < nodes; ++p) {
    std::map<int, std::vector<int>> by_alpha;
    for (int c : children[p]) by_alpha[alpha[static_cast<std::size_t>(c)]].push_back(c);
    for (auto& [a, group] : by_alpha) {
      std::vector<std::vector<Vertex>> cliques;
      for (int c : group) cliques.push_back(parent_clique_local[static_cast<std::size_t>(c)]);
      std::vector<std::size_t> nice(group.size());
      std::iota(nice.begin(), nice.end(), 0);
      if (!cliques.front().empty()) nice = nice_order(cliques, bag_index[p]);
      for (std::size_t r = 0; r < nice.size(); ++r) sibling_rank[static_cast<std::size_t>(group[nice[r]])] = static_cast<int>(r);
    }
  }
  int max_depth = 0;
  for (int d : tp.depth) max_depth = std::max(max_depth, d);
  std::vector<std::vector<int>> by_depth(static_cast<std::size_t>(max_depth) + 1);
  for (std::size_t x = 0; x < nodes; ++x) by_depth[static_cast<std::size_t>(tp.depth[x])].push_back(static_cast<int>(x));
  std::vector<int> rank(nodes, 0);
  for (auto& layer : by_depth) {
    auto key = [&](int x) {
      const auto xi = static_cast<std::size_t>(x);
      const int p = tp.parent[xi];
      const Vertex smallest = bags[xi].empty() ? -1 : bags[xi].front();
      return std::make_tuple(p < 0 ? -1 : rank[static_cast<std::size_t>(p)], p, sibling_rank[xi], smallest);
    };
    std::stable_sort(layer.begin(), layer.end(), [&](int a, int b) { return key(a) < key(b); });
    for (std::size_t r = 0; r < layer.size(); ++r) rank[static_cast<std::size_t>(layer[r])] = static_cast<int>(r);
  }

  // Expand to sub-tracks (d mod 3, alpha, j) and append in (depth, rank) order.
  auto& here = ctx[static_cast<std::size_t>(level)];
  std::vector<std::vector<Vertex>> tracks(static_cast<std::size_t>(here.track_count));
  for (const auto& layer : by_depth) {
    for (int x : layer) {
      const auto xi = static_cast<std::size_t>(x);
      const auto& sub = bag_layout[xi];
      for (std::size_t j = 0; j < sub.tracks.size(); ++j) {
        if (sub.tracks[j].empty()) continue;
        const auto key = std::make_tuple(tp.depth[xi] % 3, alpha[xi], static_cast<int>(j));
        auto [it, inserted] = here.track_ids.try_emplace(key, here.track_count);
        if (inserted) {
          ++here.track_count;
          tracks.emplace_back();
        }
        auto& dest = tracks[static_cast<std::size_t>(it->second)];
        for (Vertex lv : sub.tracks[j]) dest.push_back(bags[xi][static_cast<std::size_t>(lv)]);
      }
    }
  }
  out.tracks = std::move(tracks);
  return out;
}

}  // namespace

std::uint64_t ktree_cover_set_bound(int k) {
  if (k < 0) return 0;
  const std::uint64_t e = pow4(k);
  if (e == kSat) return kSat;
  return sat_pow(6, (e - 1) / 3);
}

std::uint64_t ktree_track_bound(int k) {
  if (k < 0) return 0;
  const std::uint64_t e = pow4(k);
  if (e == kSat) return kSat;
  return sat_mul(sat_pow(3, static_cast<std::uint64_t>(k)), sat_pow(6, (e - 3 * static_cast<std::uint64_t>(k) - 1) / 9));
}

bool ktree_recurrence_holds(int k) {
  if (ktree_cover_set_bound(0) != 1 || ktree_track_bound(0) != 1) return false;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t s = ktree_cover_set_bound(i - 1), t = ktree_track_bound(i - 1);
    const std::uint64_t si = ktree_cover_set_bound(i), ti = ktree_track_bound(i);
    if (si == kSat || ti == kSat) break;
    const std::uint64_t s2 = sat_mul(s, s);
    if (si < sat_mul(3, sat_mul(s2, sat_add(s2, 1)))) return false;
    if (ti < sat_mul(3, sat_mul(s, t))) return false;
  }
  return true;
}

KTreeTrackResult ktree_track_layout(const Graph& g, int k, const KTreeTrackOptions& options) {
  if (k < 0) throw LayoutError(ErrorKind::BadParams, "k must be non-negative");
  if (g.vertex_count() > options.vertex_budget) {
    throw LayoutError(ErrorKind::ResourceLimit, "graph exceeds the vertex budget");
  }
  std::vector<LevelContext> ctx(static_cast<std::size_t>(k) + 1);
  KTreeTrackResult result;
  result.k = k;
  result.layout = layout_level(g, k, ctx);
  result.layout.mode = TrackMode::Proper;
  result.layout.drop_empty_tracks();
  for (int level = 0; level <= k; ++level) {
    const auto& c = ctx[static_cast<std::size_t>(level)];
    result.cover_sets.push_back(c.cover_sets.size());
    result.level_tracks.push_back(static_cast<std::size_t>(c.track_count));
    if (c.cover_sets.size() > ktree_cover_set_bound(level) ||
        static_cast<std::uint64_t>(c.track_count) > ktree_track_bound(level)) {
      throw std::logic_error("track construction exceeded the t_k / s_k bounds at level " + std::to_string(level));
    }
  }
  return result;
}

KTreeTrackResult ktree_track_layout(const Graph& g, const TreeDecomposition& td, const KTreeTrackOptions& options) {
  KTreeCompletion completion = complete_to_ktree(g, td);
  KTreeTrackResult result = ktree_track_layout(completion.graph, completion.k, options);
  result.fill_edges = std::move(completion.added_edges);
  return result;
}

KTreeTrackResult partial_ktree_track_layout(const Graph& g, const KTreeTrackOptions& options) {
  const auto order = min_degree_elimination(g);
  return ktree_track_layout(g, decomposition_from_elimination(g, order), options);
}

}  // namespace twlayout
