#pragma once

#include <cstdint>
#include <vector>

#include "twlayout/decomposition.hpp"
#include "twlayout/track_layout.hpp"

namespace twlayout {

/// Saturating closed forms; UINT64_MAX means "does not fit".
std::uint64_t ktree_track_bound(int k);        // t_k = 3^k * 6^((4^k - 3k - 1)/9)
std::uint64_t ktree_cover_set_bound(int k);    // s_k = 6^((4^k - 1)/3)
/// True when t_k and s_k satisfy s_k >= 3 s_{k-1}^2 (s_{k-1}^2 + 1) and
/// t_k >= 3 s_{k-1} t_{k-1} for every level up to k that fits in 64 bits.
bool ktree_recurrence_holds(int k);

struct KTreeTrackResult {
  TrackLayout layout;
  int k = 0;
  std::vector<Edge> fill_edges;          // edges added to reach a k-tree
  std::vector<std::size_t> cover_sets;   // registered covered track sets per level
  std::vector<std::size_t> level_tracks; // canonical tracks used per level
};

struct KTreeTrackOptions {
  std::size_t vertex_budget = 1000000;
};

/// Wrapped tree-partition layout of a k-tree. Track sets of parent cliques and
/// track ids are shared across all bags of a recursion level, so the layout
/// uses at most t_k tracks. Throws NotKTree and ResourceLimit.
KTreeTrackResult ktree_track_layout(const Graph& g, int k, const KTreeTrackOptions& options = {});

/// Same construction after completing `g` along `td` to a k-tree; the layout
/// is valid for g because g is a spanning subgraph of the completion.
KTreeTrackResult ktree_track_layout(const Graph& g, const TreeDecomposition& td, const KTreeTrackOptions& options = {});

/// Uses a min-degree elimination ordering to obtain the decomposition.
KTreeTrackResult partial_ktree_track_layout(const Graph& g, const KTreeTrackOptions& options = {});

}  // namespace twlayout
