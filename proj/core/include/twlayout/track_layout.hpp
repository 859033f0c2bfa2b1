#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twlayout/graph.hpp"

namespace twlayout {

enum class TrackMode { Proper, Improper };

/// tracks[i] lists the vertices of track i in track order. Track i carries
/// the canonical number i+1 unless a numbering says otherwise.
struct TrackLayout {
  TrackMode mode = TrackMode::Proper;
  std::vector<std::vector<Vertex>> tracks;

  std::size_t track_count() const noexcept { return tracks.size(); }
  std::size_t nonempty_track_count() const noexcept;
  std::size_t max_track_size() const noexcept;
  std::size_t vertex_count() const noexcept;

  void drop_empty_tracks();
  bool operator==(const TrackLayout&) const = default;
};

/// Track number per track index; must be a bijection onto 1..t.
using TrackNumbering = std::vector<int>;
TrackNumbering canonical_numbering(const TrackLayout& layout);

/// Vertex -> (track, position) lookup for a layout over n vertices.
struct TrackIndex {
  std::vector<int> track;
  std::vector<int> position;

  TrackIndex(const TrackLayout& layout, std::size_t n);
  bool placed(Vertex v) const { return track[static_cast<std::size_t>(v)] >= 0; }
};

struct XCrossingWitness {
  Edge first;
  Edge second;
};

struct TrackLayoutReport {
  bool ok = false;
  bool assignment_ok = false;  // every vertex on exactly one track
  bool mode_ok = false;        // no intra-track edge (proper) / only consecutive ones (improper)
  std::uint64_t x_crossings = 0;
  std::size_t tracks = 0;      // nonempty tracks
  int max_span = 0;
  std::optional<XCrossingWitness> witness;
  std::string message;
};

/// Exact check: assignment, mode rules and the number of X-crossing edge pairs,
/// counted per unordered track pair as inversions of the edges' endpoint
/// positions.
TrackLayoutReport verify_track_layout(const Graph& g, const TrackLayout& layout);

/// Maximum |i - j| over edges joining tracks numbered i and j; 0 without
/// inter-track edges. Uses the canonical numbering when `numbering` is empty.
int max_span(const Graph& g, const TrackLayout& layout, std::span<const int> numbering = {});

/// Sorted indices of the tracks that meet `clique`. Throws NotAClique.
std::vector<int> covered_tracks(const Graph& g, std::span<const Vertex> clique, const TrackLayout& layout);
std::vector<int> covered_tracks(const Graph& g, std::span<const Vertex> clique, const TrackIndex& index);

/// Nice ordering of cliques that all cover the same set of tracks: returns a
/// permutation of clique indices such that whenever two cliques meet a common
/// track, the clique with the earlier vertex comes first. Throws NotSameCover
/// when covers differ and InconsistentOrder when no nice order exists (which
/// signals an X-crossing in the layout).
std::vector<std::size_t> nice_order(const std::vector<std::vector<Vertex>>& cliques, const TrackIndex& index);
std::vector<std::size_t> nice_order(const Graph& g, const std::vector<std::vector<Vertex>>& cliques,
                                    const TrackLayout& layout);

}  // namespace twlayout
