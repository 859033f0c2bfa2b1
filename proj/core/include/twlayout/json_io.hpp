#pragma once

#include <cstdint>
#include <string_view>

#include <nlohmann/json.hpp>

#include "twlayout/colouring.hpp"
#include "twlayout/decomposition.hpp"
#include "twlayout/drawing.hpp"
#include "twlayout/queue_layout.hpp"
#include "twlayout/track_layout.hpp"
#include "twlayout/tree_partition.hpp"

namespace twlayout::io {

using nlohmann::json;

// All readers throw LayoutError(BadParams) on malformed input.

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const TrackLayout& l);
TrackLayout track_layout_from_json(const json& j);

json to_json(const QueueLayout& q);
QueueLayout queue_layout_from_json(const json& j);

json to_json(const StackLayout& s);
StackLayout stack_layout_from_json(const json& j);

/// Depths are recomputed from the parent array when reading.
json to_json(const TreePartition& tp);
TreePartition tree_partition_from_json(const json& j);

json to_json(const PathDecomposition& pd);
PathDecomposition path_decomposition_from_json(const json& j);

json to_json(const TreeDecomposition& td);
TreeDecomposition tree_decomposition_from_json(const json& j);

json to_json(const Colouring& c);
Colouring colouring_from_json(const json& j);

/// Points are written translated to the origin; "origin" holds the native
/// minimum corner and reading adds it back.
json to_json(const Drawing3D& d);
Drawing3D drawing_from_json(const json& j);

json to_json(const TrackLayoutReport& r);
json to_json(const LinearLayoutReport& r);
json to_json(const DrawingReport& r);
json to_json(const TreePartitionReport& r);
json to_json(const DecompositionReport& r);
json to_json(const AcyclicColouringReport& r);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace twlayout::io
