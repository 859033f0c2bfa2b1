#include "brute.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace twtest {

namespace {

using Q = boost::multiprecision::cpp_rational;

struct Vec {
  Q x, y, z;
};

Vec sub(const Point& a, const Point& b) { return {Q(a.x - b.x), Q(a.y - b.y), Q(a.z - b.z)}; }
Vec cross(const Vec& a, const Vec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Q dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
bool is_zero(const Vec& a) { return a.x == 0 && a.y == 0 && a.z == 0; }

std::vector<int> positions_of(std::span<const Vertex> order, std::size_t n) {
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return pos;
}

std::pair<int, int> interval(const std::vector<int>& pos, const Edge& e) {
  const int a = pos[static_cast<std::size_t>(e.u)];
  const int b = pos[static_cast<std::size_t>(e.v)];
  return {std::min(a, b), std::max(a, b)};
}

int vertex_separation(const Graph& g, const std::vector<Vertex>& order) {
  const auto pos = positions_of(order, g.vertex_count());
  int best = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int count = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      for (Vertex w : g.neighbours(order[j])) {
        if (pos[static_cast<std::size_t>(w)] > static_cast<int>(i)) {
          ++count;
          break;
        }
      }
    }
    best = std::max(best, count);
  }
  return best;
}

int elimination_width(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  int width = n == 0 ? -1 : 0;
  for (Vertex v : order) {
    const auto nb = adj[static_cast<std::size_t>(v)];
    width = std::max(width, static_cast<int>(nb.size()));
    for (Vertex a : nb) {
      adj[static_cast<std::size_t>(a)].erase(v);
      for (Vertex b : nb) {
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
      }
    }
    adj[static_cast<std::size_t>(v)].clear();
  }
  return width;
}

}  // namespace

std::int64_t brute_x_crossings(const Graph& g, const twlayout::TrackLayout& layout) {
  const std::size_t n = g.vertex_count();
  std::vector<int> track(n, -1), pos(n, -1);
  for (std::size_t t = 0; t < layout.tracks.size(); ++t) {
    for (std::size_t i = 0; i < layout.tracks[t].size(); ++i) {
      const auto v = static_cast<std::size_t>(layout.tracks[t][i]);
      if (v >= n || track[v] != -1) return -1;
      track[v] = static_cast<int>(t);
      pos[v] = static_cast<int>(i);
    }
  }
  if (std::count(track.begin(), track.end(), -1) != 0) return -1;

  const auto edges = g.edges();
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      Vertex a = edges[i].u, b = edges[i].v, c = edges[j].u, d = edges[j].v;
      auto T = [&](Vertex v) { return track[static_cast<std::size_t>(v)]; };
      auto P = [&](Vertex v) { return pos[static_cast<std::size_t>(v)]; };
      if (T(a) == T(b) || T(c) == T(d)) continue;
      if (T(a) != T(c)) std::swap(c, d);
      if (T(a) != T(c) || T(b) != T(d)) continue;
      if ((P(a) < P(c) && P(b) > P(d)) || (P(a) > P(c) && P(b) < P(d))) ++count;
    }
  }
  return count;
}

std::size_t brute_nested_pairs(std::span<const Vertex> order, const std::vector<Edge>& page) {
  Vertex top = 0;
  for (Vertex v : order) top = std::max(top, v);
  const auto pos = positions_of(order, static_cast<std::size_t>(top) + 1);
  std::size_t count = 0;
  for (std::size_t i = 0; i < page.size(); ++i) {
    for (std::size_t j = 0; j < page.size(); ++j) {
      const auto [l1, r1] = interval(pos, page[i]);
      const auto [l2, r2] = interval(pos, page[j]);
      if (l1 < l2 && r2 < r1) ++count;
    }
  }
  return count;
}

std::size_t brute_crossing_pairs(std::span<const Vertex> order, const std::vector<Edge>& page) {
  Vertex top = 0;
  for (Vertex v : order) top = std::max(top, v);
  const auto pos = positions_of(order, static_cast<std::size_t>(top) + 1);
  std::size_t count = 0;
  for (std::size_t i = 0; i < page.size(); ++i) {
    for (std::size_t j = 0; j < page.size(); ++j) {
      const auto [l1, r1] = interval(pos, page[i]);
      const auto [l2, r2] = interval(pos, page[j]);
      if (l1 < l2 && l2 < r1 && r1 < r2) ++count;
    }
  }
  return count;
}

std::size_t brute_rainbow(const Graph& g, std::span<const Vertex> order) {
  const auto pos = positions_of(order, g.vertex_count());
  auto edges = g.edges();
  std::vector<std::pair<int, int>> iv;
  for (const Edge& e : edges) iv.push_back(interval(pos, e));
  std::sort(iv.begin(), iv.end(), [](auto x, auto y) { return x.second - x.first < y.second - y.first; });
  std::vector<std::size_t> best(iv.size(), 1);
  std::size_t answer = 0;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (iv[i].first < iv[j].first && iv[j].second < iv[i].second) best[i] = std::max(best[i], best[j] + 1);
    }
    answer = std::max(answer, best[i]);
  }
  return answer;
}

std::size_t brute_queue_number(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::size_t best = g.edge_count();
  do {
    best = std::min(best, brute_rainbow(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int brute_pathwidth(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  int best = static_cast<int>(g.vertex_count());
  do {
    best = std::min(best, vertex_separation(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

int brute_treewidth(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  int best = static_cast<int>(g.vertex_count());
  do {
    best = std::min(best, elimination_width(g, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

bool rational_segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  const Vec u = sub(b, a);
  const Vec v = sub(d, c);
  const Vec w = sub(c, a);
  const Vec n = cross(u, v);
  if (is_zero(n)) {
    if (!is_zero(cross(w, u))) return false;  // parallel, distinct lines
    const Q uu = dot(u, u);
    const Q tc = dot(w, u) / uu;
    const Q td = dot(sub(d, a), u) / uu;
    const Q lo = std::min(tc, td), hi = std::max(tc, td);
    return !(hi < 0 || lo > 1);
  }
  if (dot(w, n) != 0) return false;  // skew
  const Q nn = dot(n, n);
  const Q s = dot(cross(w, v), n) / nn;
  const Q t = dot(cross(w, u), n) / nn;
  return s >= 0 && s <= 1 && t >= 0 && t <= 1;
}

std::size_t brute_drawing_violations(const Graph& g, const twlayout::Drawing3D& d) {
  const auto& p = d.points;
  if (p.size() != g.vertex_count()) return 1;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) bad += p[i] == p[j];
  }
  const auto edges = g.edges();
  auto P = [&](Vertex v) { return p[static_cast<std::size_t>(v)]; };
  for (const Edge& e : edges) {
    for (std::size_t w = 0; w < p.size(); ++w) {
      if (static_cast<Vertex>(w) == e.u || static_cast<Vertex>(w) == e.v) continue;
      // a point segment w-w meets e exactly when w lies on it
      if (rational_segments_intersect(P(e.u), P(e.v), p[w], p[w])) ++bad;
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      std::vector<Vertex> shared;
      for (Vertex x : {e.u, e.v}) {
        if (x == f.u || x == f.v) shared.push_back(x);
      }
      if (shared.empty()) {
        bad += rational_segments_intersect(P(e.u), P(e.v), P(f.u), P(f.v));
        continue;
      }
      // sharing an endpoint: overlap beyond it means the far ends are
      // collinear with it on the same side
      const Vertex s = shared.front();
      const Vertex x = e.u == s ? e.v : e.u;
      const Vertex y = f.u == s ? f.v : f.u;
      const Vec dx = sub(P(x), P(s));
      const Vec dy = sub(P(y), P(s));
      if (is_zero(cross(dx, dy)) && dot(dx, dy) > 0) ++bad;
    }
  }
  return bad;
}

bool brute_bipartite_two_track(const Graph& g, std::span<const int> side) {
  std::vector<Vertex> a, b;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) (side[v] == 0 ? a : b).push_back(static_cast<Vertex>(v));
  do {
    auto bb = b;
    do {
      twlayout::TrackLayout l;
      l.tracks = {a, bb};
      if (brute_x_crossings(g, l) == 0) return true;
    } while (std::next_permutation(bb.begin(), bb.end()));
  } while (std::next_permutation(a.begin(), a.end()));
  return false;
}

namespace {

bool orders_work(const Graph& g, std::vector<std::vector<Vertex>>& tracks, std::size_t t) {
  if (t == tracks.size()) {
    twlayout::TrackLayout l;
    l.tracks = tracks;
    return brute_x_crossings(g, l) == 0;
  }
  std::sort(tracks[t].begin(), tracks[t].end());
  do {
    if (orders_work(g, tracks, t + 1)) return true;
  } while (std::next_permutation(tracks[t].begin(), tracks[t].end()));
  return false;
}

}  // namespace

bool brute_has_track_layout(const Graph& g, int t) {
  const std::size_t n = g.vertex_count();
  std::vector<int> assign(n, 0);
  while (true) {
    bool proper = true;
    for (const Edge& e : g.edges()) proper = proper && assign[static_cast<std::size_t>(e.u)] != assign[static_cast<std::size_t>(e.v)];
    if (proper) {
      std::vector<std::vector<Vertex>> tracks(static_cast<std::size_t>(t));
      for (std::size_t v = 0; v < n; ++v) tracks[static_cast<std::size_t>(assign[v])].push_back(static_cast<Vertex>(v));
      if (orders_work(g, tracks, 0)) return true;
    }
    std::size_t i = 0;
    while (i < n && ++assign[i] == t) assign[i++] = 0;
    if (i == n) return false;
  }
}

}  // namespace twtest
