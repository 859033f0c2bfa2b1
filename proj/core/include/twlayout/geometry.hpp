#pragma once

#include <cstdint>
#include <compare>

#include "twlayout/int128.hpp"

namespace twlayout {

/// Integer grid point. Predicates are exact for coordinates up to 2^30 in
/// absolute value.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;
  auto operator<=>(const Point&) const = default;
};

namespace geom {

using Wide = Int128;

/// 6 * signed volume of the tetrahedron (a, b, c, d).
Wide orient3d(const Point& a, const Point& b, const Point& c, const Point& d);

bool collinear(const Point& a, const Point& b, const Point& c);

/// p lies on the closed segment ab.
bool on_segment(const Point& p, const Point& a, const Point& b);

/// p lies on segment ab but is neither endpoint.
bool in_segment_interior(const Point& p, const Point& a, const Point& b);

/// Closed segments ab and cd share at least one point.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

}  // namespace geom
}  // namespace twlayout
