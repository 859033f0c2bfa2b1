#pragma once

// Slow reference checks used only by the tests. None of them share code with
// the library verifiers they are compared against.

#include <cstdint>
#include <span>
#include <vector>

#include "twlayout/drawing.hpp"
#include "twlayout/graph.hpp"
#include "twlayout/queue_layout.hpp"
#include "twlayout/track_layout.hpp"

namespace twtest {

using twlayout::Edge;
using twlayout::Graph;
using twlayout::Point;
using twlayout::Vertex;

/// O(m^2) pairwise X-crossing count; -1 if some vertex is unplaced or twice.
std::int64_t brute_x_crossings(const Graph& g, const twlayout::TrackLayout& layout);

/// Pairs of edges in one page that nest (queues) or cross (stacks).
std::size_t brute_nested_pairs(std::span<const Vertex> order, const std::vector<Edge>& page);
std::size_t brute_crossing_pairs(std::span<const Vertex> order, const std::vector<Edge>& page);

/// Longest strictly nested chain by O(m^2) dynamic programming.
std::size_t brute_rainbow(const Graph& g, std::span<const Vertex> order);

/// Minimum over all n! orders of brute_rainbow.
std::size_t brute_queue_number(const Graph& g);
/// Minimum over all orders of the vertex separation.
int brute_pathwidth(const Graph& g);
/// Minimum over all elimination orders of the largest eliminated degree.
int brute_treewidth(const Graph& g);

/// Closed segments intersect, decided with rational parameters.
bool rational_segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Number of violations: repeated points, vertices inside edges and edge pairs
/// meeting anywhere other than a shared endpoint.
std::size_t brute_drawing_violations(const Graph& g, const twlayout::Drawing3D& d);

/// Whether some 2-track layout with tracks exactly `side` exists, by trying
/// every pair of track orders.
bool brute_bipartite_two_track(const Graph& g, std::span<const int> side);

/// Exhaustive t-track test over assignments and orders; only for n <= 6.
bool brute_has_track_layout(const Graph& g, int t);

}  // namespace twtest
