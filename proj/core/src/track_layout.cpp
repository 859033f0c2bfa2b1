#include "twlayout/track_layout.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "twlayout/error.hpp"

namespace twlayout {

std::size_t TrackLayout::nonempty_track_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(tracks.begin(), tracks.end(), [](const auto& t) { return !t.empty(); }));
}

std::size_t TrackLayout::max_track_size() const noexcept {
  std::size_t m = 0;
  for (const auto& t : tracks) m = std::max(m, t.size());
  return m;
}

std::size_t TrackLayout::vertex_count() const noexcept {
  std::size_t m = 0;
  for (const auto& t : tracks) m += t.size();
  return m;
}

void TrackLayout::drop_empty_tracks() {
  std::erase_if(tracks, [](const auto& t) { return t.empty(); });
}

TrackNumbering canonical_numbering(const TrackLayout& layout) {
  TrackNumbering num(layout.tracks.size());
  std::iota(num.begin(), num.end(), 1);
  return num;
}

TrackIndex::TrackIndex(const TrackLayout& layout, std::size_t n) : track(n, -1), position(n, -1) {
  for (std::size_t t = 0; t < layout.tracks.size(); ++t) {
    for (std::size_t i = 0; i < layout.tracks[t].size(); ++i) {
      const Vertex v = layout.tracks[t][i];
      if (v >= 0 && static_cast<std::size_t>(v) < n) {
        track[static_cast<std::size_t>(v)] = static_cast<int>(t);
        position[static_cast<std::size_t>(v)] = static_cast<int>(i);
      }
    }
  }
}

namespace {

// Counts pairs (i, j) with a_i < a_j and b_i > b_j. Input sorted by (a, b).
std::uint64_t count_strict_inversions(const std::vector<std::pair<int, int>>& pts, int b_max,
                                      std::optional<std::pair<std::size_t, std::size_t>>& witness) {
  // Fenwick tree over b for points with strictly smaller a; groups of equal a
  // are queried before they are inserted.
  std::vector<std::uint64_t> fen(static_cast<std::size_t>(b_max) + 2, 0);
  auto add = [&](int b) {
    for (std::size_t i = static_cast<std::size_t>(b) + 1; i < fen.size(); i += i & (~i + 1)) ++fen[i];
  };
  auto prefix = [&](int b) {  // count of inserted with value <= b
    std::uint64_t s = 0;
    for (std::size_t i = static_cast<std::size_t>(b) + 1; i > 0; i -= i & (~i + 1)) s += fen[i];
    return s;
  };
  std::uint64_t inserted = 0, count = 0;
  int best_b = -1;
  std::size_t best_idx = 0;
  std::size_t i = 0;
  while (i < pts.size()) {
    std::size_t j = i;
    while (j < pts.size() && pts[j].first == pts[i].first) ++j;
    for (std::size_t q = i; q < j; ++q) {
      const std::uint64_t greater = inserted - prefix(pts[q].second);
      count += greater;
      if (greater > 0 && !witness && best_b > pts[q].second) witness = std::make_pair(best_idx, q);
    }
    for (std::size_t q = i; q < j; ++q) {
      add(pts[q].second);
      ++inserted;
      if (pts[q].second > best_b) {
        best_b = pts[q].second;
        best_idx = q;
      }
    }
    i = j;
  }
  return count;
}

}  // namespace

TrackLayoutReport verify_track_layout(const Graph& g, const TrackLayout& layout) {
  TrackLayoutReport r;
  const std::size_t n = g.vertex_count();
  r.tracks = layout.nonempty_track_count();

  r.assignment_ok = true;
  {
    std::vector<int> seen(n, 0);
    for (const auto& t : layout.tracks) {
      for (Vertex v : t) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]++) {
          r.assignment_ok = false;
          r.message = "vertex " + std::to_string(v) + " is invalid or appears twice";
        }
      }
    }
    for (std::size_t v = 0; v < n && r.assignment_ok; ++v) {
      if (!seen[v]) {
        r.assignment_ok = false;
        r.message = "vertex " + std::to_string(v) + " is on no track";
      }
    }
  }
  if (!r.assignment_ok) return r;

  const TrackIndex idx(layout, n);
  r.mode_ok = true;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> by_pair;
  std::map<std::pair<int, int>, std::vector<Edge>> edges_by_pair;
  for (const Edge& e : g.edges()) {
    const int tu = idx.track[static_cast<std::size_t>(e.u)], tv = idx.track[static_cast<std::size_t>(e.v)];
    const int pu = idx.position[static_cast<std::size_t>(e.u)], pv = idx.position[static_cast<std::size_t>(e.v)];
    if (tu == tv) {
      const bool allowed = layout.mode == TrackMode::Improper && std::abs(pu - pv) == 1;
      if (!allowed && r.mode_ok) {
        r.mode_ok = false;
        r.message = "intra-track edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                    (layout.mode == TrackMode::Proper ? " in a proper layout" : " between non-consecutive vertices");
      }
      continue;
    }
    r.max_span = std::max(r.max_span, std::abs(tu - tv));
    if (tu < tv) {
      by_pair[{tu, tv}].emplace_back(pu, pv);
      edges_by_pair[{tu, tv}].push_back(e);
    } else {
      by_pair[{tv, tu}].emplace_back(pv, pu);
      edges_by_pair[{tv, tu}].push_back(e);
    }
  }

  for (auto& [pair, pts] : by_pair) {
    auto& es = edges_by_pair[pair];
    std::vector<std::size_t> perm(pts.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(pts.size());
    int b_max = 0;
    for (std::size_t p : perm) {
      sorted.push_back(pts[p]);
      b_max = std::max(b_max, pts[p].second);
    }
    std::optional<std::pair<std::size_t, std::size_t>> w;
    r.x_crossings += count_strict_inversions(sorted, b_max, w);
    if (w && !r.witness) {
      r.witness = XCrossingWitness{es[perm[w->first]], es[perm[w->second]]};
      if (r.message.empty()) r.message = "X-crossing between tracks " + std::to_string(pair.first) + " and " + std::to_string(pair.second);
    }
  }
  r.ok = r.assignment_ok && r.mode_ok && r.x_crossings == 0;
  return r;
}

int max_span(const Graph& g, const TrackLayout& layout, std::span<const int> numbering) {
  const TrackIndex idx(layout, g.vertex_count());
  auto number = [&](int t) { return numbering.empty() ? t + 1 : numbering[static_cast<std::size_t>(t)]; };
  int span = 0;
  for (const Edge& e : g.edges()) {
    const int tu = idx.track[static_cast<std::size_t>(e.u)], tv = idx.track[static_cast<std::size_t>(e.v)];
    if (tu < 0 || tv < 0 || tu == tv) continue;
    span = std::max(span, std::abs(number(tu) - number(tv)));
  }
  return span;
}

std::vector<int> covered_tracks(const Graph& g, std::span<const Vertex> clique, const TrackIndex& index) {
  if (!is_clique(g, clique)) throw LayoutError(ErrorKind::NotAClique, "vertex set is not a clique");
  std::vector<int> out;
  out.reserve(clique.size());
  for (Vertex v : clique) out.push_back(index.track[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> covered_tracks(const Graph& g, std::span<const Vertex> clique, const TrackLayout& layout) {
  return covered_tracks(g, clique, TrackIndex(layout, g.vertex_count()));
}

std::vector<std::size_t> nice_order(const std::vector<std::vector<Vertex>>& cliques, const TrackIndex& index) {
  std::vector<std::size_t> order(cliques.size());
  std::iota(order.begin(), order.end(), 0);
  if (cliques.empty()) return order;

  // For each clique, its position on each covered track, listed in track order.
  std::vector<std::vector<std::pair<int, int>>> keys(cliques.size());
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    for (Vertex v : cliques[c]) {
      keys[c].emplace_back(index.track[static_cast<std::size_t>(v)], index.position[static_cast<std::size_t>(v)]);
    }
    std::sort(keys[c].begin(), keys[c].end());
    for (std::size_t i = 1; i < keys[c].size(); ++i) {
      if (keys[c][i].first == keys[c][i - 1].first) {
        throw LayoutError(ErrorKind::NotSameCover, "clique has two vertices on one track");
      }
    }
  }
  auto cover = [&](std::size_t c) {
    std::vector<int> t;
    for (auto [track, pos] : keys[c]) t.push_back(track);
    return t;
  };
  const auto reference = cover(0);
  for (std::size_t c = 1; c < cliques.size(); ++c) {
    if (cover(c) != reference) throw LayoutError(ErrorKind::NotSameCover, "cliques cover different track sets");
  }
  // Primary key: position on the first covered track; later tracks break ties
  // created by shared vertices.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < keys[a].size(); ++i) {
      if (keys[a][i].second != keys[b][i].second) return keys[a][i].second < keys[b][i].second;
    }
    return false;
  });
  for (std::size_t i = 0; i < reference.size(); ++i) {
    for (std::size_t j = 1; j < order.size(); ++j) {
      if (keys[order[j - 1]][i].second > keys[order[j]][i].second) {
        throw LayoutError(ErrorKind::InconsistentOrder,
                          "cliques are ordered differently on two tracks (X-crossing in the layout)");
      }
    }
  }
  return order;
}

std::vector<std::size_t> nice_order(const Graph& g, const std::vector<std::vector<Vertex>>& cliques,
                                    const TrackLayout& layout) {
  const TrackIndex idx(layout, g.vertex_count());
  for (const auto& c : cliques) {
    if (!is_clique(g, c)) throw LayoutError(ErrorKind::NotAClique, "nice_order input is not a clique");
  }
  return nice_order(cliques, idx);
}

}  // namespace twlayout
