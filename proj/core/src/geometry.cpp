#include "twlayout/geometry.hpp"

#include <algorithm>

namespace twlayout::geom {

namespace {

struct Vec {
  Wide x, y, z;
};

Vec sub(const Point& a, const Point& b) { return {Wide{a.x} - b.x, Wide{a.y} - b.y, Wide{a.z} - b.z}; }

Vec cross(const Vec& a, const Vec& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Wide dot(const Vec& a, const Vec& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

bool zero(const Vec& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

Wide abs_wide(Wide v) { return v < 0 ? -v : v; }

int sign(Wide v) { return (v > 0) - (v < 0); }

struct P2 {
  Wide u, v;
};

Wide orient2d(const P2& a, const P2& b, const P2& c) { return (b.u - a.u) * (c.v - a.v) - (b.v - a.v) * (c.u - a.u); }

bool between(Wide a, Wide b, Wide c) { return std::min(a, b) <= c && c <= std::max(a, b); }

bool on_segment_2d(const P2& p, const P2& a, const P2& b) {
  return orient2d(a, b, p) == 0 && between(a.u, b.u, p.u) && between(a.v, b.v, p.v);
}

bool intersect_2d(const P2& a, const P2& b, const P2& c, const P2& d) {
  const int o1 = sign(orient2d(a, b, c)), o2 = sign(orient2d(a, b, d));
  const int o3 = sign(orient2d(c, d, a)), o4 = sign(orient2d(c, d, b));
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  return on_segment_2d(c, a, b) || on_segment_2d(d, a, b) || on_segment_2d(a, c, d) || on_segment_2d(b, c, d);
}

// Drops the coordinate along which `normal` is largest.
P2 project(const Point& p, const Vec& normal) {
  const Wide ax = abs_wide(normal.x), ay = abs_wide(normal.y), az = abs_wide(normal.z);
  if (ax >= ay && ax >= az) return {Wide{p.y}, Wide{p.z}};
  if (ay >= az) return {Wide{p.x}, Wide{p.z}};
  return {Wide{p.x}, Wide{p.y}};
}

}  // namespace

Wide orient3d(const Point& a, const Point& b, const Point& c, const Point& d) {
  return dot(cross(sub(b, a), sub(c, a)), sub(d, a));
}

bool collinear(const Point& a, const Point& b, const Point& c) { return zero(cross(sub(b, a), sub(c, a))); }

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (!collinear(a, b, p)) return false;
  const Vec ab = sub(b, a), ap = sub(p, a);
  const Wide t = dot(ap, ab);
  return t >= 0 && t <= dot(ab, ab);
}

bool in_segment_interior(const Point& p, const Point& a, const Point& b) {
  return p != a && p != b && on_segment(p, a, b);
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  // Cheap bounding-box rejection.
  if (std::max(a.x, b.x) < std::min(c.x, d.x) || std::max(c.x, d.x) < std::min(a.x, b.x) ||
      std::max(a.y, b.y) < std::min(c.y, d.y) || std::max(c.y, d.y) < std::min(a.y, b.y) ||
      std::max(a.z, b.z) < std::min(c.z, d.z) || std::max(c.z, d.z) < std::min(a.z, b.z)) {
    return false;
  }
  if (orient3d(a, b, c, d) != 0) return false;
  Vec normal = cross(sub(b, a), sub(c, a));
  if (zero(normal)) normal = cross(sub(b, a), sub(d, a));
  if (zero(normal)) normal = cross(sub(d, c), sub(a, c));
  if (zero(normal)) {
    // All four points on one line (or degenerate segments).
    return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
  }
  return intersect_2d(project(a, normal), project(b, normal), project(c, normal), project(d, normal));
}

}  // namespace twlayout::geom
