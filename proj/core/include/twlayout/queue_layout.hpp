#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twlayout/colouring.hpp"
#include "twlayout/track_layout.hpp"

namespace twlayout {

/// Vertex order plus a partition of the edges into queues.
struct QueueLayout {
  std::vector<Vertex> order;
  std::vector<std::vector<Edge>> queues;

  std::size_t queue_count() const noexcept { return queues.size(); }
};

/// Vertex order plus a partition of the edges into stacks.
struct StackLayout {
  std::vector<Vertex> order;
  std::vector<std::vector<Edge>> stacks;

  std::size_t stack_count() const noexcept { return stacks.size(); }
};

struct EdgePair {
  Edge first;
  Edge second;
};

struct LinearLayoutReport {
  bool ok = false;
  bool order_ok = false;  // order is a permutation of V(G)
  bool edges_ok = false;  // every edge of G in exactly one page, nothing else
  bool pages_ok = false;  // no nested pair (queues) / crossing pair (stacks)
  std::size_t pages = 0;
  std::optional<EdgePair> witness;
  std::string message;
};

LinearLayoutReport verify_queue_layout(const Graph& g, const QueueLayout& q);
LinearLayoutReport verify_stack_layout(const Graph& g, const StackLayout& s);

/// Largest set of pairwise strictly nested edges under `order`.
struct Rainbow {
  std::size_t size = 0;
  std::vector<Edge> edges;  // outermost first
};
Rainbow max_rainbow(const Graph& g, std::span<const Vertex> order);

/// Queue of an edge = (depth of its interval in the containment order) - 1.
QueueLayout queues_from_ordering(const Graph& g, std::span<const Vertex> order);

/// Order = tracks in numbering order; queue = span - 1, and intra-track
/// edges of an improper layout share one extra queue. Empty queues dropped.
QueueLayout queue_from_track(const Graph& g, const TrackLayout& layout, std::span<const int> numbering = {});

struct TrackFromQueueResult {
  TrackLayout layout;
  int modulus = 0;     // 2q
  int colours = 0;     // c
  std::size_t bound = 0;  // c * (2q)^(c-1), saturating
};

/// Refines an acyclic colouring by edge labels (queue, direction) so that the
/// edges between any two refined classes carry one label; classes become
/// tracks ordered by the queue order. Throws NotAcyclic.
TrackFromQueueResult track_from_queue(const Graph& g, const QueueLayout& q, const Colouring& c);

/// True when all edges between each pair of tracks share one
/// (queue, direction) label, direction taken from the lower colour.
bool track_pairs_monochromatic(const Graph& g, const QueueLayout& q, const Colouring& c, const TrackLayout& layout);

struct BipartiteLayouts {
  TrackLayout tracks;  // track 0 = A, track 1 = B
  QueueLayout queue;   // order A then B, one queue
};

/// `side[v]` is 0 for A and 1 for B. Throws BadParams if an edge joins a
/// side to itself and NoSuchLayout if some component is not a caterpillar.
BipartiteLayouts bipartite_roundtrip(const Graph& g, std::span<const int> side);

QueueLayout tree_1queue(const Graph& forest);
StackLayout tree_1stack(const Graph& forest);

}  // namespace twlayout
