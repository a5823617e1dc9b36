#pragma once

// Static SVG plot of a discretization: input points, point inverses, one
// outline per canonical translate and a star at each reference point.
// Numbers are printed with a fixed format so equal inputs give equal bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "geocover/geom.hpp"
#include "geocover/pipeline.hpp"

namespace geocover {

namespace detail {

inline std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

/// Plot coordinates: y grows upward in the input, downward in SVG.
inline std::string xy(Point p) { return num(p.x) + "," + num(-p.y); }

inline std::string ring_path(const Ring& ring) {
  std::string d;
  for (std::size_t i = 0; i < ring.size(); ++i) d += (i == 0 ? "M" : " L") + xy(ring[i]);
  return d + " Z";
}

inline std::string disk_path(Point c, double r) {
  const Point a = c - Point{r, 0.0}, b = c + Point{r, 0.0};
  const std::string rr = num(r) + " " + num(r);
  return "M" + xy(a) + " A" + rr + " 0 1 0 " + xy(b) + " A" + rr + " 0 1 0 " + xy(a) + " Z";
}

/// Closed outline of the prototype with its reference point at `at`.
inline std::vector<Ring> outline_rings(const ShapeSpec& spec, Point at) {
  const Shape& s = spec.shape;
  if (s.is_disk()) {
    const Point c = at + (s.center - s.reference);
    Ring r;
    const AffineTransform t = spec.transform.value_or(AffineTransform{});
    for (int k = 0; k < 96; ++k) {
      const double th = 2.0 * std::numbers::pi * k / 96.0;
      const Point u = s.radius * Point{std::cos(th), std::sin(th)};
      r.push_back(c + t.apply(u) - t.offset);
    }
    return {r};
  }
  const Shape placed = translated(s, at);
  std::vector<Ring> out{placed.outer};
  out.insert(out.end(), placed.holes.begin(), placed.holes.end());
  return out;
}

inline std::string outline_path(const ShapeSpec& spec, Point at) {
  const Shape& s = spec.shape;
  if (s.is_disk() && !spec.transform) return disk_path(at + (s.center - s.reference), s.radius);
  std::string d;
  for (const auto& r : outline_rings(spec, at)) d += (d.empty() ? "" : " ") + ring_path(r);
  return d;
}

inline std::string star_path(Point c, double size) {
  Ring r;
  for (int k = 0; k < 10; ++k) {
    const double th = std::numbers::pi / 2 + std::numbers::pi * k / 5.0;
    const double rad = (k % 2 == 0) ? size : 0.4 * size;
    r.push_back(c + rad * Point{std::cos(th), std::sin(th)});
  }
  return ring_path(r);
}

}  // namespace detail

inline std::string emit_svg(const DiscretizeResult& result, const std::vector<Point>& points, const ShapeSpec& spec) {
  // The inverse of the prototype is the prototype reflected through its
  // reference; drawing it at p uses the same outline code.
  ShapeSpec inverse = spec;
  inverse.shape = point_inversion(spec.shape);

  Point lo{0, 0}, hi{0, 0};
  bool any = false;
  auto grow = [&](Point p) {
    if (!any) {
      lo = hi = p;
      any = true;
    }
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  };
  for (const auto& p : points) {
    grow(p);
    for (const auto& r : detail::outline_rings(inverse, p))
      for (const auto& v : r) grow(v);
  }
  for (const auto& t : result.translates) grow(t.reference);
  const double extent = std::max({hi.x - lo.x, hi.y - lo.y, 1e-6});
  const double margin = 0.05 * extent;
  const double marker = 0.008 * extent;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + detail::num(lo.x - margin) + " " +
         detail::num(-hi.y - margin) + " " + detail::num(hi.x - lo.x + 2 * margin) + " " +
         detail::num(hi.y - lo.y + 2 * margin) + "\">\n";
  out += "<style>.inverse{fill:none;stroke:#7a8fa6;stroke-width:" + detail::num(0.5 * marker) +
         "}.translate{fill:#f2b134;fill-opacity:0.15;stroke:#c97d10;stroke-width:" + detail::num(0.5 * marker) +
         "}.star{fill:#c0392b}.point{fill:#222}</style>\n";
  out += "<g id=\"inverses\">\n";
  for (const auto& p : points)
    out += "<path class=\"inverse\" fill-rule=\"evenodd\" d=\"" + detail::outline_path(inverse, p) + "\"/>\n";
  out += "</g>\n<g id=\"translates\">\n";
  for (const auto& t : result.translates)
    out += "<path class=\"translate\" fill-rule=\"evenodd\" d=\"" + detail::outline_path(spec, t.reference) + "\"/>\n";
  out += "</g>\n<g id=\"references\">\n";
  for (const auto& t : result.translates)
    out += "<path class=\"star\" d=\"" + detail::star_path(t.reference, 2.5 * marker) + "\"/>\n";
  out += "</g>\n<g id=\"points\">\n";
  for (const auto& p : points) {
    out += "<circle class=\"point\" cx=\"" + detail::num(p.x) + "\" cy=\"" + detail::num(-p.y) + "\" r=\"" +
           detail::num(marker) + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace geocover
