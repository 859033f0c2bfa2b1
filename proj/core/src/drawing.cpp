#include "twlayout/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "twlayout/error.hpp"
#include "twlayout/track_transforms.hpp"

namespace twlayout {

double Box::aspect_ratio() const {
  const auto lo = std::min({x, y, z}), hi = std::max({x, y, z});
  return lo <= 0 ? 0.0 : static_cast<double>(hi) / static_cast<double>(lo);
}

Point Drawing3D::min_corner() const {
  if (points.empty()) return {};
  Point m = points.front();
  for (const Point& p : points) {
    m.x = std::min(m.x, p.x);
    m.y = std::min(m.y, p.y);
    m.z = std::min(m.z, p.z);
  }
  return m;
}

Box Drawing3D::extents() const {
  if (points.empty()) return {};
  Point lo = points.front(), hi = points.front();
  for (const Point& p : points) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
  }
  return {hi.x - lo.x + 1, hi.y - lo.y + 1, hi.z - lo.z + 1};
}

Drawing3D Drawing3D::translated_to_origin() const {
  Drawing3D out = *this;
  const Point m = min_corner();
  for (Point& p : out.points) p = {p.x - m.x, p.y - m.y, p.z - m.z};
  return out;
}

DrawingReport verify_drawing(const Graph& g, const Drawing3D& d) {
  DrawingReport r;
  const std::size_t n = g.vertex_count();
  r.size_ok = d.points.size() == n;
  if (!r.size_ok) {
    r.message = "drawing has " + std::to_string(d.points.size()) + " points for " + std::to_string(n) + " vertices";
    return r;
  }
  constexpr std::int64_t kLimit = std::int64_t{1} << 30;
  for (const Point& p : d.points) {
    if (std::llabs(p.x) > kLimit || std::llabs(p.y) > kLimit || std::llabs(p.z) > kLimit) {
      r.message = "coordinate outside the exact range";
      return r;
    }
  }
  r.extents = d.extents();

  std::vector<Point> sorted = d.points;
  std::sort(sorted.begin(), sorted.end());
  r.distinct_ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!r.distinct_ok) r.message = "two vertices share a grid point";

  const auto edges = g.edges();
  auto pt = [&](Vertex v) -> const Point& { return d.points[static_cast<std::size_t>(v)]; };

  r.vertex_on_edge_ok = true;
  for (const Edge& e : edges) {
    const Point &a = pt(e.u), &b = pt(e.v);
    const Point lo{std::min(a.x, b.x), std::min(a.y, b.y), std::min(a.z, b.z)};
    const Point hi{std::max(a.x, b.x), std::max(a.y, b.y), std::max(a.z, b.z)};
    for (std::size_t v = 0; v < n && r.vertex_on_edge_ok; ++v) {
      if (static_cast<Vertex>(v) == e.u || static_cast<Vertex>(v) == e.v) continue;
      const Point& p = d.points[v];
      if (p.x < lo.x || p.x > hi.x || p.y < lo.y || p.y > hi.y || p.z < lo.z || p.z > hi.z) continue;
      if (geom::on_segment(p, a, b)) {
        r.vertex_on_edge_ok = false;
        r.message = "vertex " + std::to_string(v) + " lies on edge " + std::to_string(e.u) + "-" + std::to_string(e.v);
      }
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge &e = edges[i], &f = edges[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      if (geom::segments_intersect(pt(e.u), pt(e.v), pt(f.u), pt(f.v))) {
        if (r.crossings == 0 && r.message.empty()) {
          r.message = "edges " + std::to_string(e.u) + "-" + std::to_string(e.v) + " and " + std::to_string(f.u) + "-" +
                      std::to_string(f.v) + " cross";
        }
        ++r.crossings;
      }
    }
  }
  r.crossings_ok = r.crossings == 0;

  const long double X = static_cast<long double>(r.extents.x), Y = static_cast<long double>(r.extents.y),
                    Z = static_cast<long double>(r.extents.z);
  r.edge_bound = n == 0 ? 0 : (2 * X - 1) * (2 * Y - 1) * (2 * Z - 1) - X * Y * Z;
  r.edge_bound_ok = static_cast<long double>(edges.size()) <= r.edge_bound;
  if (!r.edge_bound_ok && r.message.empty()) r.message = "edge count exceeds the grid-box bound";

  if (d.box && n > 0) {
    r.box_ok = r.extents.x <= d.box->x && r.extents.y <= d.box->y && r.extents.z <= d.box->z;
    if (!r.box_ok && r.message.empty()) r.message = "drawing does not fit its declared box";
  }
  r.ok = r.distinct_ok && r.vertex_on_edge_ok && r.crossings_ok && r.edge_bound_ok && r.box_ok;
  return r;
}

std::int64_t smallest_prime_gt(std::int64_t k) {
  auto prime = [](std::int64_t v) {
    if (v < 2) return false;
    for (std::int64_t d = 2; d * d <= v; ++d) {
      if (v % d == 0) return false;
    }
    return true;
  };
  std::int64_t p = std::max<std::int64_t>(k, 1) + 1;
  while (!prime(p)) ++p;
  return p;
}

Drawing3D draw_from_track(const Graph& g, const TrackLayout& layout) {
  const std::size_t n = g.vertex_count();
  Drawing3D out;
  out.points.resize(n);
  const auto k = static_cast<std::int64_t>(layout.tracks.size());
  const std::int64_t p = smallest_prime_gt(k);
  std::vector<char> placed(n, 0);
  std::int64_t widest = 0;
  for (std::int64_t i = 1; i <= k; ++i) {
    const auto& track = layout.tracks[static_cast<std::size_t>(i - 1)];
    widest = std::max<std::int64_t>(widest, static_cast<std::int64_t>(track.size()));
    std::int64_t z = (i * i * i) % p;
    if (z == 0) z = p;
    for (Vertex v : track) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || placed[static_cast<std::size_t>(v)]) {
        throw LayoutError(ErrorKind::BadParams, "track layout does not match the graph");
      }
      placed[static_cast<std::size_t>(v)] = 1;
      out.points[static_cast<std::size_t>(v)] = {i, (i * i) % p, z};
      z += p;
    }
  }
  if (std::count(placed.begin(), placed.end(), 0) != 0) {
    throw LayoutError(ErrorKind::BadParams, "track layout misses a vertex");
  }
  out.box = Box{k, 2 * k, 2 * k * widest};
  return out;
}

Drawing3D moment_curve(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 1024) throw LayoutError(ErrorKind::ResourceLimit, "moment curve coordinates overflow beyond n = 1024");
  Drawing3D out;
  for (std::size_t v = 0; v < n; ++v) {
    const auto i = static_cast<std::int64_t>(v) + 1;
    out.points.push_back({i, i * i, i * i * i});
  }
  return out;
}

Drawing3D cohen_mod_p(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const std::int64_t p = smallest_prime_gt(n);
  Drawing3D out;
  for (std::int64_t i = 1; i <= n; ++i) out.points.push_back({i, (i * i) % p, (i * i * i) % p});
  out.box = Box{n, 2 * n, 2 * n};
  return out;
}

Drawing3D draw_balanced(const Graph& g, const TrackLayout& layout) {
  TrackLayout l = layout;
  l.drop_empty_tracks();
  if (l.tracks.empty()) return draw_from_track(g, l);
  return draw_from_track(g, balance(l, Rational(static_cast<std::int64_t>(l.tracks.size()))));
}

Drawing3D draw_aspect(const Graph& g, const TrackLayout& layout, std::int64_t r) {
  TrackLayout l = layout;
  l.drop_empty_tracks();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto t = static_cast<std::int64_t>(l.tracks.size());
  if (r < 1 || r * t > n) {
    throw LayoutError(ErrorKind::BadParams, "aspect parameter r must satisfy 1 <= r <= n/t (n=" + std::to_string(n) +
                                                ", t=" + std::to_string(t) + ")");
  }
  return draw_from_track(g, balance(l, Rational(n, r)));
}

TrackLayout track_from_drawing(const Graph& g, const Drawing3D& d) {
  const auto report = verify_drawing(g, d);
  if (!report.ok) throw LayoutError(ErrorKind::InvalidDrawing, report.message);
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<Vertex>> columns;
  for (std::size_t v = 0; v < d.points.size(); ++v) {
    columns[{d.points[v].x, d.points[v].y}].push_back(static_cast<Vertex>(v));
  }
  TrackLayout out;
  out.mode = TrackMode::Improper;
  for (auto& [xy, vs] : columns) {
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
      return d.points[static_cast<std::size_t>(a)].z < d.points[static_cast<std::size_t>(b)].z;
    });
    out.tracks.push_back(std::move(vs));
  }
  return out;
}

void write_obj(std::ostream& out, const Graph& g, const Drawing3D& d) {
  const Point origin = d.min_corner();
  out << "# twlayout drawing, " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  out << "# origin " << origin.x << ' ' << origin.y << ' ' << origin.z << '\n';
  for (const Point& p : d.translated_to_origin().points) out << "v " << p.x << ' ' << p.y << ' ' << p.z << '\n';
  for (const Edge& e : g.edges()) out << "l " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_svg(std::ostream& out, const Graph& g, const Drawing3D& d) {
  // Isometric projection, for viewing only.
  const auto pts = d.translated_to_origin().points;
  std::vector<std::pair<double, double>> xy;
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
  for (const Point& p : pts) {
    const double px = (static_cast<double>(p.x) - static_cast<double>(p.y)) * c;
    const double py = (static_cast<double>(p.x) + static_cast<double>(p.y)) * s - static_cast<double>(p.z);
    xy.emplace_back(px, py);
    min_x = std::min(min_x, px);
    max_x = std::max(max_x, px);
    min_y = std::min(min_y, py);
    max_y = std::max(max_y, py);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double scale = 800.0 / span, pad = 20.0;
  auto X = [&](double v) { return pad + (v - min_x) * scale; };
  auto Y = [&](double v) { return pad + (v - min_y) * scale; };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(max_x) + pad << "\" height=\"" << Y(max_y) + pad
      << "\">\n";
  for (const Edge& e : g.edges()) {
    const auto& a = xy[static_cast<std::size_t>(e.u)];
    const auto& b = xy[static_cast<std::size_t>(e.v)];
    out << "  <line x1=\"" << X(a.first) << "\" y1=\"" << Y(a.second) << "\" x2=\"" << X(b.first) << "\" y2=\""
        << Y(b.second) << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t v = 0; v < xy.size(); ++v) {
    out << "  <circle cx=\"" << X(xy[v].first) << "\" cy=\"" << Y(xy[v].second) << "\" r=\"3\" fill=\"#c33\"><title>"
        << v << "</title></circle>\n";
  }
  out << "</svg>\n";
}

}  // namespace twlayout
