#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "twlayout/geometry.hpp"
#include "twlayout/track_layout.hpp"

namespace twlayout {

/// Side lengths of an axis-aligned box in grid points (X x Y x Z).
struct Box {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  Int128 volume() const { return static_cast<Int128>(x) * y * z; }
  double aspect_ratio() const;
  bool operator==(const Box&) const = default;
};

/// Points are kept in the constructor's native coordinates. `box`, when
/// present, is the box the construction guarantees to contain the drawing.
struct Drawing3D {
  std::vector<Point> points;
  std::optional<Box> box;

  Point min_corner() const;
  Box extents() const;  // tight: max - min + 1 per axis
  Drawing3D translated_to_origin() const;
};

struct DrawingReport {
  bool ok = false;
  bool size_ok = false;      // one point per vertex
  bool distinct_ok = false;
  bool vertex_on_edge_ok = false;
  bool crossings_ok = false;
  bool edge_bound_ok = false;
  bool box_ok = true;        // extents fit in the declared box
  std::uint64_t crossings = 0;
  Box extents;
  long double edge_bound = 0;
  std::string message;
};

/// Exact check over all edge pairs and vertex/edge pairs.
DrawingReport verify_drawing(const Graph& g, const Drawing3D& d);

std::int64_t smallest_prime_gt(std::int64_t k);

/// Track i (1-based) at x = i, y = i^2 mod p, and z the r-th positive value
/// congruent to i^3 mod p for the vertex at rank r; p the smallest prime > t.
Drawing3D draw_from_track(const Graph& g, const TrackLayout& layout);

Drawing3D moment_curve(const Graph& g);  // ResourceLimit for n > 1024
Drawing3D cohen_mod_p(const Graph& g);

/// balance(L, t) then draw_from_track, t = number of nonempty tracks.
Drawing3D draw_balanced(const Graph& g, const TrackLayout& layout);

/// balance(L, n/r) then draw_from_track; requires 1 <= r and r * t <= n.
Drawing3D draw_aspect(const Graph& g, const TrackLayout& layout, std::int64_t r);

/// Columns (x, y) ordered by z; an improper layout. Throws InvalidDrawing.
TrackLayout track_from_drawing(const Graph& g, const Drawing3D& d);

void write_obj(std::ostream& out, const Graph& g, const Drawing3D& d);
void write_svg(std::ostream& out, const Graph& g, const Drawing3D& d);

}  // namespace twlayout
