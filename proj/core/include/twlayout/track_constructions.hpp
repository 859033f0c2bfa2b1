#pragma once

#include "twlayout/decomposition.hpp"
#include "twlayout/track_layout.hpp"
#include "twlayout/tree_partition.hpp"

namespace twlayout {

/// 3-track layout of a forest: track = BFS depth mod 3, order = BFS order.
/// Components are rooted at their smallest vertex and concatenated.
TrackLayout tree_3track(const Graph& forest);

/// Layout with one track per BFS depth (span 1); wrapping it gives tree_3track.
TrackLayout tree_depth_layout(const Graph& forest);

/// Interval colouring of the vertex intervals of a path decomposition.
TrackLayout from_path_decomposition(const Graph& g, const PathDecomposition& pd);

/// 3-track layout of the bag tree with every track split into width(tp)
/// sub-tracks.
TrackLayout from_tree_partition(const Graph& g, const TreePartition& tp);

/// Grid vertex r*cols + c on track r + c, ordered by row. Span 1.
TrackLayout grid_diagonal_layout(int rows, int cols);
TrackLayout grid_3track(int rows, int cols);

/// Exactly (k+1)(k+2)/2 tracks for the graph produced by generate_gk(k).
TrackLayout gk_layout(int k, std::size_t vertex_budget = 200000);
inline int gk_track_count(int k) { return (k + 1) * (k + 2) / 2; }

}  // namespace twlayout
