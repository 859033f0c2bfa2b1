#include "twlayout/queue_layout.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

#include "twlayout/error.hpp"

namespace twlayout {

namespace {

std::vector<int> order_positions(std::span<const Vertex> order, std::size_t n, bool* ok = nullptr) {
  std::vector<int> pos(n, -1);
  bool good = order.size() == n;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 0 || static_cast<std::size_t>(v) >= n || pos[static_cast<std::size_t>(v)] >= 0) {
      good = false;
      continue;
    }
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  if (ok) *ok = good;
  return pos;
}

struct Interval {
  int l;
  int r;
  std::size_t edge;
};

std::vector<Interval> intervals(std::span<const Edge> edges, const std::vector<int>& pos) {
  std::vector<Interval> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int a = pos[static_cast<std::size_t>(edges[i].u)], b = pos[static_cast<std::size_t>(edges[i].v)];
    if (a > b) std::swap(a, b);
    out.push_back({a, b, i});
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> find_nested(std::vector<Interval> iv) {
  std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.l != b.l ? a.l < b.l : a.r < b.r; });
  int best_r = std::numeric_limits<int>::min();
  std::size_t best = 0;
  std::size_t i = 0;
  while (i < iv.size()) {
    std::size_t j = i;
    while (j < iv.size() && iv[j].l == iv[i].l) ++j;
    for (std::size_t q = i; q < j; ++q) {
      if (best_r > iv[q].r) return std::make_pair(best, iv[q].edge);
    }
    for (std::size_t q = i; q < j; ++q) {
      if (iv[q].r > best_r) {
        best_r = iv[q].r;
        best = iv[q].edge;
      }
    }
    i = j;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> find_crossing(std::vector<Interval> iv, std::size_t n) {
  std::vector<std::vector<std::size_t>> opening(n), closing(n);
  for (std::size_t i = 0; i < iv.size(); ++i) {
    opening[static_cast<std::size_t>(iv[i].l)].push_back(i);
    closing[static_cast<std::size_t>(iv[i].r)].push_back(i);
  }
  std::vector<std::size_t> stack;
  for (std::size_t p = 0; p < n; ++p) {
    // Edges closing here must sit on top of the stack.
    for (std::size_t c = 0; c < closing[p].size(); ++c) {
      const std::size_t top = stack.back();
      if (iv[top].r != static_cast<int>(p)) {
        // Some edge closing at p lies below `top`, which opened later and closes later.
        for (std::size_t e : closing[p]) {
          if (std::find(stack.begin(), stack.end(), e) != stack.end()) return std::make_pair(iv[e].edge, iv[top].edge);
        }
      }
      stack.pop_back();
    }
    auto& open = opening[p];
    std::sort(open.begin(), open.end(), [&](std::size_t a, std::size_t b) { return iv[a].r > iv[b].r; });
    for (std::size_t e : open) stack.push_back(e);
  }
  return std::nullopt;
}

template <typename Pages>
LinearLayoutReport verify_pages(const Graph& g, std::span<const Vertex> order, const Pages& pages, bool queue) {
  LinearLayoutReport r;
  const std::size_t n = g.vertex_count();
  r.pages = pages.size();
  const auto pos = order_positions(order, n, &r.order_ok);
  if (!r.order_ok) {
    r.message = "order is not a permutation of the vertices";
    return r;
  }
  std::vector<Edge> all;
  for (const auto& page : pages) all.insert(all.end(), page.begin(), page.end());
  std::sort(all.begin(), all.end());
  r.edges_ok = all == g.edges();
  if (!r.edges_ok) {
    r.message = "pages do not partition the edge set";
    return r;
  }
  r.pages_ok = true;
  for (const auto& page : pages) {
    const auto iv = intervals(page, pos);
    const auto bad = queue ? find_nested(iv) : find_crossing(iv, n);
    if (bad) {
      r.pages_ok = false;
      r.witness = EdgePair{page[bad->first], page[bad->second]};
      r.message = std::string(queue ? "nested" : "crossing") + " edges in one " + (queue ? "queue" : "stack");
      break;
    }
  }
  r.ok = r.pages_ok;
  return r;
}

// Depth of every interval in the strict containment order (outermost = 1)
// and a predecessor giving a longest chain.
struct ChainDepths {
  std::vector<int> depth;
  std::vector<std::ptrdiff_t> pred;
};

ChainDepths chain_depths(const std::vector<Interval>& iv, std::size_t n) {
  ChainDepths out{std::vector<int>(iv.size(), 0), std::vector<std::ptrdiff_t>(iv.size(), -1)};
  std::vector<std::size_t> idx(iv.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return iv[a].l != iv[b].l ? iv[a].l < iv[b].l : iv[a].r > iv[b].r;
  });
  // Fenwick prefix-max over reversed right endpoints.
  std::vector<std::pair<int, std::ptrdiff_t>> fen(n + 1, {0, -1});
  auto update = [&](int r, std::pair<int, std::ptrdiff_t> val) {
    for (std::size_t i = n - static_cast<std::size_t>(r); i <= n; i += i & (~i + 1)) fen[i] = std::max(fen[i], val);
  };
  auto query = [&](int r) {  // max over right endpoints > r
    std::pair<int, std::ptrdiff_t> best{0, -1};
    for (std::size_t i = n - 1 - static_cast<std::size_t>(r); i > 0; i -= i & (~i + 1)) best = std::max(best, fen[i]);
    return best;
  };
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j < idx.size() && iv[idx[j]].l == iv[idx[i]].l) ++j;
    for (std::size_t q = i; q < j; ++q) {
      const auto best = query(iv[idx[q]].r);
      out.depth[idx[q]] = best.first + 1;
      out.pred[idx[q]] = best.second;
    }
    for (std::size_t q = i; q < j; ++q) update(iv[idx[q]].r, {out.depth[idx[q]], static_cast<std::ptrdiff_t>(idx[q])});
    i = j;
  }
  return out;
}

}  // namespace

LinearLayoutReport verify_queue_layout(const Graph& g, const QueueLayout& q) {
  return verify_pages(g, q.order, q.queues, true);
}

LinearLayoutReport verify_stack_layout(const Graph& g, const StackLayout& s) {
  return verify_pages(g, s.order, s.stacks, false);
}

Rainbow max_rainbow(const Graph& g, std::span<const Vertex> order) {
  bool ok = false;
  const auto pos = order_positions(order, g.vertex_count(), &ok);
  if (!ok) throw LayoutError(ErrorKind::BadParams, "order is not a permutation of the vertices");
  const auto edges = g.edges();
  const auto iv = intervals(edges, pos);
  const auto chain = chain_depths(iv, g.vertex_count());
  Rainbow out;
  std::ptrdiff_t deepest = -1;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (deepest < 0 || chain.depth[i] > chain.depth[static_cast<std::size_t>(deepest)]) deepest = static_cast<std::ptrdiff_t>(i);
  }
  for (std::ptrdiff_t e = deepest; e >= 0; e = chain.pred[static_cast<std::size_t>(e)]) {
    out.edges.push_back(edges[static_cast<std::size_t>(e)]);
  }
  std::reverse(out.edges.begin(), out.edges.end());
  out.size = out.edges.size();
  return out;
}

QueueLayout queues_from_ordering(const Graph& g, std::span<const Vertex> order) {
  bool ok = false;
  const auto pos = order_positions(order, g.vertex_count(), &ok);
  if (!ok) throw LayoutError(ErrorKind::BadParams, "order is not a permutation of the vertices");
  const auto edges = g.edges();
  const auto iv = intervals(edges, pos);
  const auto chain = chain_depths(iv, g.vertex_count());
  QueueLayout out;
  out.order.assign(order.begin(), order.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto qi = static_cast<std::size_t>(chain.depth[i] - 1);
    if (out.queues.size() <= qi) out.queues.resize(qi + 1);
    out.queues[qi].push_back(edges[i]);
  }
  return out;
}

QueueLayout queue_from_track(const Graph& g, const TrackLayout& layout, std::span<const int> numbering) {
  const std::size_t t = layout.tracks.size();
  std::vector<int> num(t);
  for (std::size_t i = 0; i < t; ++i) num[i] = numbering.empty() ? static_cast<int>(i) + 1 : numbering[i];
  std::vector<std::size_t> by_number(t);
  std::iota(by_number.begin(), by_number.end(), 0);
  std::sort(by_number.begin(), by_number.end(), [&](std::size_t a, std::size_t b) { return num[a] < num[b]; });
  QueueLayout out;
  for (std::size_t i : by_number) out.order.insert(out.order.end(), layout.tracks[i].begin(), layout.tracks[i].end());

  const TrackIndex idx(layout, g.vertex_count());
  const int s = max_span(g, layout, numbering);
  out.queues.resize(static_cast<std::size_t>(s) + 1);
  for (const Edge& e : g.edges()) {
    const int tu = idx.track[static_cast<std::size_t>(e.u)], tv = idx.track[static_cast<std::size_t>(e.v)];
    if (tu < 0 || tv < 0) throw LayoutError(ErrorKind::BadParams, "layout misses an edge endpoint");
    const int span = std::abs(num[static_cast<std::size_t>(tu)] - num[static_cast<std::size_t>(tv)]);
    out.queues[static_cast<std::size_t>(span == 0 ? s : span - 1)].push_back(e);
  }
  std::erase_if(out.queues, [](const auto& q) { return q.empty(); });
  return out;
}

namespace {

struct EdgeLabels {
  std::vector<Edge> edges;
  std::vector<int> label;

  int of(Edge e) const {
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    return label[static_cast<std::size_t>(it - edges.begin())];
  }
};

// label = 2 * queue + (0 if the lower-coloured end comes first, else 1)
EdgeLabels edge_labels(const Graph& g, const QueueLayout& q, const Colouring& c) {
  const auto pos = order_positions(q.order, g.vertex_count());
  std::vector<std::pair<Edge, int>> tagged;
  for (std::size_t qi = 0; qi < q.queues.size(); ++qi) {
    for (const Edge& e : q.queues[qi]) {
      Vertex lo = e.u, hi = e.v;
      if (c.colour[static_cast<std::size_t>(lo)] > c.colour[static_cast<std::size_t>(hi)]) std::swap(lo, hi);
      const int dir = pos[static_cast<std::size_t>(lo)] < pos[static_cast<std::size_t>(hi)] ? 0 : 1;
      tagged.emplace_back(e, 2 * static_cast<int>(qi) + dir);
    }
  }
  std::sort(tagged.begin(), tagged.end());
  EdgeLabels out;
  for (auto& [e, l] : tagged) {
    out.edges.push_back(e);
    out.label.push_back(l);
  }
  return out;
}

}  // namespace

TrackFromQueueResult track_from_queue(const Graph& g, const QueueLayout& q, const Colouring& c) {
  const std::size_t n = g.vertex_count();
  if (c.colour.size() != n) throw LayoutError(ErrorKind::BadParams, "colouring size does not match the graph");
  const auto acyclic = verify_acyclic_colouring(g, c);
  if (!acyclic.ok) throw LayoutError(ErrorKind::NotAcyclic, acyclic.message);
  const auto qr = verify_queue_layout(g, q);
  if (!qr.ok) throw LayoutError(ErrorKind::BadParams, "invalid queue layout: " + qr.message);

  const int colours = c.colour_count;
  const int modulus = std::max(1, 2 * static_cast<int>(q.queue_count()));
  const auto labels = edge_labels(g, q, c);

  // f[v][j]: label of v in the forest of colours {colour(v), j}.
  std::vector<std::vector<int>> f(n, std::vector<int>(static_cast<std::size_t>(colours), 0));
  std::vector<char> seen(n);
  std::vector<Vertex> queue;
  for (int a = 0; a < colours; ++a) {
    for (int b = a + 1; b < colours; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      auto in_pair = [&](Vertex v) {
        const int cv = c.colour[static_cast<std::size_t>(v)];
        return cv == a || cv == b;
      };
      for (std::size_t root = 0; root < n; ++root) {
        if (seen[root] || !in_pair(static_cast<Vertex>(root))) continue;
        seen[root] = 1;
        queue.assign(1, static_cast<Vertex>(root));
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const Vertex v = queue[head];
          const int cv = c.colour[static_cast<std::size_t>(v)];
          const int other = cv == a ? b : a;
          for (Vertex w : g.neighbours(v)) {
            if (seen[static_cast<std::size_t>(w)] || c.colour[static_cast<std::size_t>(w)] != other) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            const int lambda = labels.of(Edge(v, w));
            f[static_cast<std::size_t>(w)][static_cast<std::size_t>(cv)] =
                ((lambda - f[static_cast<std::size_t>(v)][static_cast<std::size_t>(other)]) % modulus + modulus) % modulus;
            queue.push_back(w);
          }
        }
      }
    }
  }

  std::map<std::vector<int>, std::vector<Vertex>> classes;
  const auto pos = order_positions(q.order, n);
  std::vector<Vertex> by_pos(q.order.begin(), q.order.end());
  for (Vertex v : by_pos) {
    const auto vi = static_cast<std::size_t>(v);
    std::vector<int> key{c.colour[vi]};
    for (int j = 0; j < colours; ++j) {
      if (j != c.colour[vi]) key.push_back(f[vi][static_cast<std::size_t>(j)]);
    }
    classes[key].push_back(v);
  }
  TrackFromQueueResult out;
  out.modulus = modulus;
  out.colours = colours;
  for (auto& [key, members] : classes) out.layout.tracks.push_back(std::move(members));

  std::size_t bound = static_cast<std::size_t>(std::max(colours, 0));
  for (int i = 1; i < colours; ++i) {
    if (bound > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(modulus)) {
      bound = std::numeric_limits<std::size_t>::max();
      break;
    }
    bound *= static_cast<std::size_t>(modulus);
  }
  out.bound = bound;
  if (!track_pairs_monochromatic(g, q, c, out.layout)) {
    throw std::logic_error("refined colouring has a track pair with two edge labels");
  }
  return out;
}

bool track_pairs_monochromatic(const Graph& g, const QueueLayout& q, const Colouring& c, const TrackLayout& layout) {
  const auto labels = edge_labels(g, q, c);
  const TrackIndex idx(layout, g.vertex_count());
  std::map<std::pair<int, int>, int> seen;
  for (std::size_t i = 0; i < labels.edges.size(); ++i) {
    const Edge e = labels.edges[i];
    Vertex lo = e.u, hi = e.v;
    if (c.colour[static_cast<std::size_t>(lo)] > c.colour[static_cast<std::size_t>(hi)]) std::swap(lo, hi);
    const int tl = idx.track[static_cast<std::size_t>(lo)], th = idx.track[static_cast<std::size_t>(hi)];
    if (tl == th) return false;
    auto [it, inserted] = seen.try_emplace({tl, th}, labels.label[i]);
    if (!inserted && it->second != labels.label[i]) return false;
  }
  return true;
}

BipartiteLayouts bipartite_roundtrip(const Graph& g, std::span<const int> side) {
  const std::size_t n = g.vertex_count();
  if (side.size() != n) throw LayoutError(ErrorKind::BadParams, "side vector size does not match the graph");
  for (int s : side) {
    if (s != 0 && s != 1) throw LayoutError(ErrorKind::BadParams, "side values must be 0 (A) or 1 (B)");
  }
  for (const Edge& e : g.edges()) {
    if (side[static_cast<std::size_t>(e.u)] == side[static_cast<std::size_t>(e.v)]) {
      throw LayoutError(ErrorKind::BadParams, "edge inside one side of the bipartition");
    }
  }
  BipartiteLayouts out;
  out.tracks.tracks.resize(2);
  auto place = [&](Vertex v) { out.tracks.tracks[static_cast<std::size_t>(side[static_cast<std::size_t>(v)])].push_back(v); };

  for (const auto& comp : connected_components(g)) {
    std::size_t degree_sum = 0;
    for (Vertex v : comp) degree_sum += g.degree(v);
    if (degree_sum / 2 != comp.size() - 1) {
      throw LayoutError(ErrorKind::NoSuchLayout, "component containing vertex " + std::to_string(comp.front()) +
                                                     " has a cycle, so no 2-track layout with these tracks exists");
    }
    if (comp.size() <= 2) {
      for (Vertex v : comp) place(v);
      continue;
    }
    auto spine = [&](Vertex v) { return g.degree(v) >= 2; };
    Vertex start = -1;
    for (Vertex v : comp) {
      if (!spine(v)) continue;
      int spine_nbrs = 0;
      for (Vertex w : g.neighbours(v)) spine_nbrs += spine(w) ? 1 : 0;
      if (spine_nbrs > 2) {
        throw LayoutError(ErrorKind::NoSuchLayout, "component containing vertex " + std::to_string(comp.front()) +
                                                       " is not a caterpillar");
      }
      if (spine_nbrs <= 1 && start < 0) start = v;
    }
    Vertex prev = -1, cur = start;
    while (cur >= 0) {
      place(cur);
      Vertex next = -1;
      for (Vertex w : g.neighbours(cur)) {
        if (!spine(w)) {
          place(w);
        } else if (w != prev) {
          next = w;
        }
      }
      prev = cur;
      cur = next;
    }
  }
  out.queue.order = out.tracks.tracks[0];
  out.queue.order.insert(out.queue.order.end(), out.tracks.tracks[1].begin(), out.tracks.tracks[1].end());
  if (g.edge_count() > 0) out.queue.queues.push_back(g.edges());
  return out;
}

namespace {

void require_forest(const Graph& g) {
  if (!is_forest(g)) throw LayoutError(ErrorKind::NotForest, "graph contains a cycle");
}

}  // namespace

QueueLayout tree_1queue(const Graph& forest) {
  require_forest(forest);
  const std::size_t n = forest.vertex_count();
  QueueLayout out;
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    std::size_t head = out.order.size();
    out.order.push_back(static_cast<Vertex>(r));
    while (head < out.order.size()) {
      const Vertex v = out.order[head++];
      for (Vertex w : forest.neighbours(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          out.order.push_back(w);
        }
      }
    }
  }
  if (forest.edge_count() > 0) out.queues.push_back(forest.edges());
  return out;
}

StackLayout tree_1stack(const Graph& forest) {
  require_forest(forest);
  const std::size_t n = forest.vertex_count();
  StackLayout out;
  std::vector<char> seen(n);
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (std::size_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = 1;
    out.order.push_back(static_cast<Vertex>(r));
    stack.emplace_back(static_cast<Vertex>(r), 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto nbrs = forest.neighbours(v);
      if (next == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nbrs[next++];
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      out.order.push_back(w);
      stack.emplace_back(w, 0);
    }
  }
  if (forest.edge_count() > 0) out.stacks.push_back(forest.edges());
  return out;
}

}  // namespace twlayout
