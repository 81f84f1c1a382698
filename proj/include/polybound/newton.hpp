#ifndef POLYBOUND_NEWTON_HPP
#define POLYBOUND_NEWTON_HPP

// Newton polygon of f = sum a_i y^i under v(a) = -deg a on K[x].
// Edge slopes are negated root valuations, so the sign of each slope tells
// on which side of the unit circle ||y|| = 1 its roots lie.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "polybound/bipoly.hpp"
#include "polybound/field.hpp"

namespace polybound {

struct NewtonPoint {
  std::int64_t i;
  std::int64_t v;
  friend bool operator==(const NewtonPoint&, const NewtonPoint&) = default;
};

struct NewtonEdge {
  std::int64_t width;
  Rational slope;
  friend bool operator==(const NewtonEdge&, const NewtonEdge&) = default;
};

struct NewtonPolygon {
  std::vector<NewtonPoint> points;
  std::vector<NewtonPoint> vertices;
  std::vector<NewtonEdge> edges;
};

struct RootLocation {
  std::int64_t inside = 0;    // v(theta) > 0
  std::int64_t boundary = 0;  // v(theta) = 0
  std::int64_t outside = 0;   // v(theta) < 0
  friend bool operator==(const RootLocation&, const RootLocation&) = default;
};

namespace detail {
// Cross product of (b - a) and (c - a); <= 0 means b is not strictly below segment ac.
inline std::int64_t cross(const NewtonPoint& a, const NewtonPoint& b, const NewtonPoint& c) {
  return (b.i - a.i) * (c.v - a.v) - (b.v - a.v) * (c.i - a.i);
}
}  // namespace detail

template <FieldElement E>
NewtonPolygon build_polygon(const BiPoly<E>& f) {
  if (f.is_zero() || f.coeff(0).is_zero())
    throw Error(Errc::ZeroConstantTerm, "Newton polygon needs a_0 != 0; strip the y-power first");
  if (f.deg_y() < Degree(1)) throw Error(Errc::ConstantInY, "Newton polygon needs deg_y >= 1");
  NewtonPolygon np;
  const auto c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) np.points.push_back({static_cast<std::int64_t>(i), -c[i].degree().value()});
  // Lower hull by monotone chain; collinear middle points are dropped.
  for (const auto& p : np.points) {
    while (np.vertices.size() >= 2 &&
           detail::cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), p) <= 0)
      np.vertices.pop_back();
    np.vertices.push_back(p);
  }
  for (std::size_t k = 1; k < np.vertices.size(); ++k) {
    const auto& a = np.vertices[k - 1];
    const auto& b = np.vertices[k];
    np.edges.push_back({b.i - a.i, Rational(b.v - a.v, b.i - a.i)});
  }
  return np;
}

template <FieldElement E>
RootLocation root_location(const BiPoly<E>& f) {
  RootLocation r;
  for (const auto& e : build_polygon(f).edges) {
    if (e.slope < Rational(0)) r.inside += e.width;
    else if (e.slope == Rational(0)) r.boundary += e.width;
    else r.outside += e.width;
  }
  return r;
}

/// Edges as a slope -> total width map. Edge slopes are already distinct.
inline std::map<Rational, std::int64_t> slope_multiset(const NewtonPolygon& np) {
  std::map<Rational, std::int64_t> out;
  for (const auto& e : np.edges) out[e.slope] += e.width;
  return out;
}

/// Union of slope multisets, widths of equal slopes added.
inline std::map<Rational, std::int64_t> merge_slopes(std::map<Rational, std::int64_t> a,
                                                     const std::map<Rational, std::int64_t>& b) {
  for (const auto& [s, w] : b) a[s] += w;
  return a;
}

/// SVG drawing: i grows to the right, v is drawn upward (so negative v sits below the axis).
inline std::string render_svg(const NewtonPolygon& np) {
  constexpr std::int64_t scale = 60, margin = 40;
  std::int64_t imax = 0, vmin = 0, vmax = 0;
  for (const auto& p : np.points) {
    imax = std::max(imax, p.i);
    vmin = std::min(vmin, p.v);
    vmax = std::max(vmax, p.v);
  }
  const std::int64_t width = imax * scale + 2 * margin;
  const std::int64_t height = (vmax - vmin) * scale + 2 * margin;
  auto sx = [&](std::int64_t i) { return margin + i * scale; };
  auto sy = [&](std::int64_t v) { return margin + (vmax - v) * scale; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(imax) << "\" y2=\"" << sy(0)
     << "\" stroke=\"#bbbbbb\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(vmax) << "\" x2=\"" << sx(0) << "\" y2=\"" << sy(vmin)
     << "\" stroke=\"#bbbbbb\"/>\n";
  if (!np.vertices.empty()) {
    os << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < np.vertices.size(); ++k)
      os << (k ? " " : "") << sx(np.vertices[k].i) << ',' << sy(np.vertices[k].v);
    os << "\"/>\n";
  }
  for (const auto& p : np.points)
    os << "<circle cx=\"" << sx(p.i) << "\" cy=\"" << sy(p.v) << "\" r=\"4\" fill=\"black\"/>\n";
  for (std::size_t k = 0; k < np.edges.size(); ++k) {
    const auto& a = np.vertices[k];
    const auto& b = np.vertices[k + 1];
    os << "<text x=\"" << (sx(a.i) + sx(b.i)) / 2 << "\" y=\"" << (sy(a.v) + sy(b.v)) / 2 - 8
       << "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" << np.edges[k].slope << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace polybound

#endif  // POLYBOUND_NEWTON_HPP
