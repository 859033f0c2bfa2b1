#pragma once

#include <cstdint>
#include <vector>

#include "twlayout/decomposition.hpp"
#include "twlayout/queue_layout.hpp"
#include "twlayout/track_layout.hpp"

namespace twlayout {

template <typename Witness>
struct OracleResult {
  int value = 0;
  Witness witness;
  std::uint64_t explored = 0;  // search nodes (or DP states)
};

struct OracleLimits {
  std::size_t queue_max_n = 9;
  std::size_t track_max_n = 7;
  std::size_t pathwidth_max_n = 14;
  std::size_t treewidth_max_n = 14;
};

/// Minimum over vertex orders of the largest rainbow. Throws TooLarge.
OracleResult<QueueLayout> exact_queue_number(const Graph& g, std::size_t max_n = OracleLimits{}.queue_max_n);

/// Smallest t with a t-track layout. Throws TooLarge.
OracleResult<TrackLayout> exact_track_number(const Graph& g, std::size_t max_n = OracleLimits{}.track_max_n);

/// Vertex separation number; the witness is an order whose path
/// decomposition has that width. Throws TooLarge.
OracleResult<std::vector<Vertex>> exact_pathwidth(const Graph& g, std::size_t max_n = OracleLimits{}.pathwidth_max_n);

/// Witness is an elimination order attaining the tree-width. Throws TooLarge.
OracleResult<std::vector<Vertex>> exact_treewidth(const Graph& g, std::size_t max_n = OracleLimits{}.treewidth_max_n);

}  // namespace twlayout
