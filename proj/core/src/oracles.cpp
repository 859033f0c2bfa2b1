#include "twlayout/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "twlayout/error.hpp"

namespace twlayout {

namespace {

void gate(const Graph& g, std::size_t max_n, const char* what) {
  if (g.vertex_count() > max_n) {
    throw LayoutError(ErrorKind::TooLarge, std::string(what) + " oracle is limited to n <= " + std::to_string(max_n) +
                                               " (got n = " + std::to_string(g.vertex_count()) + ")");
  }
}

class QueueSearch {
 public:
  explicit QueueSearch(const Graph& g) : g_(g), n_(g.vertex_count()), pos_(n_, -1), best_at_left_(n_, 0) {}

  OracleResult<QueueLayout> run() {
    OracleResult<QueueLayout> result;
    std::vector<Vertex> identity(n_);
    std::iota(identity.begin(), identity.end(), 0);
    best_order_ = identity;
    best_ = static_cast<int>(queues_from_ordering(g_, identity).queue_count());
    lower_ = g_.edge_count() > 0 ? 1 : 0;
    if (best_ > lower_) dfs(0);
    result.value = best_;
    result.witness = queues_from_ordering(g_, best_order_);
    result.explored = explored_;
    return result;
  }

 private:
  // best_at_left_[l]: deepest chain (as outermost edge) among placed edges with left end l.
  void dfs(int placed) {
    ++explored_;
    if (static_cast<std::size_t>(placed) == n_) {
      if (order_.front() > order_.back() && n_ > 1) return;  // reversal gives the same value
      if (current_ < best_) {
        best_ = current_;
        best_order_ = order_;
      }
      return;
    }
    for (std::size_t v = 0; v < n_ && best_ > lower_; ++v) {
      if (pos_[v] >= 0) continue;
      if (placed > 0 && static_cast<std::size_t>(placed) == n_ - 1 && static_cast<Vertex>(v) < order_.front()) continue;
      const auto saved_left = best_at_left_;
      const int saved_current = current_;
      pos_[v] = placed;
      order_.push_back(static_cast<Vertex>(v));
      // suffix[l] = max chain depth over edges with left end >= l
      std::vector<int> suffix(n_ + 1, 0);
      for (int l = placed - 1; l >= 0; --l) {
        suffix[static_cast<std::size_t>(l)] = std::max(suffix[static_cast<std::size_t>(l) + 1], best_at_left_[static_cast<std::size_t>(l)]);
      }
      for (Vertex u : g_.neighbours(static_cast<Vertex>(v))) {
        const int pu = pos_[static_cast<std::size_t>(u)];
        if (pu < 0 || pu == placed) continue;
        const int depth = 1 + suffix[static_cast<std::size_t>(pu) + 1];
        best_at_left_[static_cast<std::size_t>(pu)] = std::max(best_at_left_[static_cast<std::size_t>(pu)], depth);
        current_ = std::max(current_, depth);
      }
      if (current_ < best_) dfs(placed + 1);
      order_.pop_back();
      pos_[v] = -1;
      best_at_left_ = saved_left;
      current_ = saved_current;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<int> pos_;
  std::vector<int> best_at_left_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  int current_ = 0;
  int best_ = 0;
  int lower_ = 0;
  std::uint64_t explored_ = 0;
};

class TrackSearch {
 public:
  explicit TrackSearch(const Graph& g) : g_(g), n_(g.vertex_count()), track_of_(n_, -1) {
    // BFS order so that each vertex after a component's first has a placed neighbour.
    std::vector<char> seen(n_);
    for (std::size_t r = 0; r < n_; ++r) {
      if (seen[r]) continue;
      seen[r] = 1;
      std::size_t head = order_.size();
      order_.push_back(static_cast<Vertex>(r));
      while (head < order_.size()) {
        for (Vertex w : g_.neighbours(order_[head++])) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool feasible(std::size_t t) {
    tracks_.assign(t, {});
    std::fill(track_of_.begin(), track_of_.end(), -1);
    return place(0);
  }

  TrackLayout witness() const {
    TrackLayout out;
    out.tracks = tracks_;
    out.drop_empty_tracks();
    return out;
  }

  std::uint64_t explored() const { return explored_; }

 private:
  int position(Vertex v) const {
    const auto& tr = tracks_[static_cast<std::size_t>(track_of_[static_cast<std::size_t>(v)])];
    return static_cast<int>(std::find(tr.begin(), tr.end(), v) - tr.begin());
  }

  bool crossing_free(Vertex v) const {
    const int tv = track_of_[static_cast<std::size_t>(v)];
    const int pv = position(v);
    for (Vertex u : g_.neighbours(v)) {
      const int tu = track_of_[static_cast<std::size_t>(u)];
      if (tu < 0) continue;
      const int pu = position(u);
      for (Vertex a : tracks_[static_cast<std::size_t>(tv)]) {
        if (a == v) continue;
        const int pa = position(a);
        for (Vertex b : g_.neighbours(a)) {
          if (b == u || track_of_[static_cast<std::size_t>(b)] != tu) continue;
          const int pb = position(b);
          if ((pa < pv) != (pb < pu)) return false;
        }
      }
    }
    return true;
  }

  bool place(std::size_t i) {
    ++explored_;
    if (i == order_.size()) return true;
    const Vertex v = order_[i];
    std::size_t used = 0;
    while (used < tracks_.size() && !tracks_[used].empty()) ++used;
    const std::size_t limit = std::min(tracks_.size(), used + 1);
    for (std::size_t t = 0; t < limit; ++t) {
      bool clash = false;
      for (Vertex u : g_.neighbours(v)) clash = clash || track_of_[static_cast<std::size_t>(u)] == static_cast<int>(t);
      if (clash) continue;
      auto& tr = tracks_[t];
      track_of_[static_cast<std::size_t>(v)] = static_cast<int>(t);
      for (std::size_t p = 0; p <= tr.size(); ++p) {
        tr.insert(tr.begin() + static_cast<std::ptrdiff_t>(p), v);
        if (crossing_free(v) && place(i + 1)) return true;
        tr.erase(tr.begin() + static_cast<std::ptrdiff_t>(p));
      }
      track_of_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> order_;
  std::vector<int> track_of_;
  std::vector<std::vector<Vertex>> tracks_;
  std::uint64_t explored_ = 0;
};

std::vector<std::uint32_t> neighbour_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.vertex_count(), 0);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbours(static_cast<Vertex>(v))) nb[v] |= std::uint32_t{1} << w;
  }
  return nb;
}

}  // namespace

OracleResult<QueueLayout> exact_queue_number(const Graph& g, std::size_t max_n) {
  gate(g, max_n, "queue-number");
  return QueueSearch(g).run();
}

OracleResult<TrackLayout> exact_track_number(const Graph& g, std::size_t max_n) {
  gate(g, max_n, "track-number");
  OracleResult<TrackLayout> result;
  const std::size_t n = g.vertex_count();
  if (n == 0) return result;
  TrackSearch search(g);
  for (std::size_t t = g.edge_count() > 0 ? 2 : 1; t <= n; ++t) {
    if (search.feasible(t)) {
      result.witness = search.witness();
      result.value = static_cast<int>(result.witness.tracks.size());
      break;
    }
  }
  result.explored = search.explored();
  return result;
}

OracleResult<std::vector<Vertex>> exact_pathwidth(const Graph& g, std::size_t max_n) {
  gate(g, std::min<std::size_t>(max_n, 20), "path-width");
  const std::size_t n = g.vertex_count();
  const auto nb = neighbour_masks(g);
  const std::uint32_t full = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  std::vector<int> f(std::size_t{1} << n, 0);
  std::vector<std::int8_t> last(f.size(), -1);
  OracleResult<std::vector<Vertex>> result;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int boundary = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((s >> v & 1u) && (nb[v] & ~s & full)) ++boundary;
    }
    int best = std::numeric_limits<int>::max();
    for (std::size_t v = 0; v < n; ++v) {
      if (!(s >> v & 1u)) continue;
      const int prev = f[s & ~(std::uint32_t{1} << v)];
      if (prev < best) {
        best = prev;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
    f[s] = std::max(boundary, best);
    ++result.explored;
  }
  result.value = f[full];
  for (std::uint32_t s = full; s != 0; s &= ~(std::uint32_t{1} << last[s])) result.witness.push_back(last[s]);
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

OracleResult<std::vector<Vertex>> exact_treewidth(const Graph& g, std::size_t max_n) {
  gate(g, std::min<std::size_t>(max_n, 20), "tree-width");
  const std::size_t n = g.vertex_count();
  const auto nb = neighbour_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  // |Q(S, v)|: vertices outside S + v reachable from v through S.
  auto q_size = [&](std::uint32_t s, std::size_t v) {
    std::uint32_t reached = std::uint32_t{1} << v, frontier = reached;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= nb[static_cast<std::size_t>(std::countr_zero(f))];
      next &= ~reached;
      reached |= next;
      frontier = next & s;
    }
    return std::popcount(reached & ~s & ~(std::uint32_t{1} << v));
  };
  std::vector<int> tw(std::size_t{1} << n, 0);
  std::vector<std::int8_t> last(tw.size(), -1);
  tw[0] = -1;
  OracleResult<std::vector<Vertex>> result;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (std::size_t v = 0; v < n; ++v) {
      if (!(s >> v & 1u)) continue;
      const std::uint32_t rest = s & ~(std::uint32_t{1} << v);
      const int val = std::max(tw[rest], q_size(rest, v));
      if (val < best) {
        best = val;
        last[s] = static_cast<std::int8_t>(v);
      }
    }
    tw[s] = best;
    ++result.explored;
  }
  result.value = std::max(0, tw[full]);
  for (std::uint32_t s = full; s != 0; s &= ~(std::uint32_t{1} << last[s])) result.witness.push_back(last[s]);
  std::reverse(result.witness.begin(), result.witness.end());
  return result;
}

}  // namespace twlayout
