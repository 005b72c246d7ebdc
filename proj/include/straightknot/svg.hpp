#pragma once

// SVG drawing of a straight diagram.

#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "straightknot/diagram.hpp"

namespace straightknot {

struct SvgStyle {
  double unit = 40.0;      // pixels per axis unit
  double margin = 20.0;
  double gap = 7.0;        // half-width of the break at an under-crossing
  double min_radius = 6.0;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

/// Straight strand as one horizontal path, one `arc` path per semicircle,
/// and a dashed `extension` left of the strand when arcs are uncontained.
/// The axis spans x in [-(u+1), n+2] with y = 0 at mid-height.
inline std::string render_svg(const StraightDiagram& d, const SvgStyle& style = {}) {
  using detail::fmt;
  const int n = d.crossings();
  const int u = d.uncontained_arcs();
  double max_r = 0.5;
  for (const auto& s : d.semicircles()) max_r = std::max(max_r, s.radius());
  const double x_min = -(u + 1), x_max = n + 2;
  const double width = (x_max - x_min) * style.unit + 2 * style.margin;
  const double half_h = max_r * style.unit + style.margin;
  auto X = [&](double x) { return (x - x_min) * style.unit + style.margin; };
  const double Y0 = half_h;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(2 * half_h) +
         "\" viewBox=\"0 0 " + fmt(width) + ' ' + fmt(2 * half_h) + "\">\n";
  out += "<style>path{fill:none;stroke:#222;stroke-width:2}.extension{stroke:#888;stroke-dasharray:6 4;stroke-width:1}"
         "text{font:11px sans-serif;fill:#555}</style>\n";

  // Straight strand, broken where the semicircle passes over it.
  std::string strand = "M " + fmt(X(0)) + ' ' + fmt(Y0);
  for (int k = 1; k <= n; ++k) {
    if (d.word().sign_at(k) != Sign::Over) continue;
    strand += " L " + fmt(X(k) - style.gap) + ' ' + fmt(Y0) + " M " + fmt(X(k) + style.gap) + ' ' + fmt(Y0);
  }
  strand += " L " + fmt(X(n + 1)) + ' ' + fmt(Y0);
  out += "<path class=\"strand\" d=\"" + strand + "\"/>\n";
  if (u > 0) out += "<path class=\"extension\" d=\"M " + fmt(X(x_min)) + ' ' + fmt(Y0) + " L " + fmt(X(0)) + ' ' + fmt(Y0) + "\"/>\n";

  // Semicircles, trimmed at ends where they pass under the strand.
  for (const auto& s : d.semicircles()) {
    const double c = s.center();
    const double r_px = std::max(s.radius() * style.unit, style.min_radius);
    const double dir = s.span.side == Side::Top ? -1.0 : 1.0;  // screen y
    auto end_point = [&](Coord x, bool trim) {
      const double sx = x > s.span.lo() ? 1.0 : -1.0;  // which end of the diameter
      const double theta = trim ? style.gap / r_px : 0.0;
      return std::pair{X(c) + sx * r_px * std::cos(theta), Y0 + dir * r_px * std::sin(theta)};
    };
    auto under_at = [&](Coord x) { return x > 0 && x <= n && d.word().sign_at(static_cast<int>(x)) == Sign::Under; };
    const auto [x1, y1] = end_point(s.span.a, under_at(s.span.a));
    const auto [x2, y2] = end_point(s.span.b, under_at(s.span.b));
    // Sweep so the arc bulges to its own side.
    const bool left_to_right = s.span.a < s.span.b;
    const int sweep = (s.span.side == Side::Top) == left_to_right ? 1 : 0;
    out += "<path class=\"arc\" data-arc=\"" + std::to_string(s.arc) + "\"" + (s.uncontained ? " data-uncontained=\"1\"" : "") +
           " d=\"M " + fmt(x1) + ' ' + fmt(y1) + " A " + fmt(r_px) + ' ' + fmt(r_px) + " 0 0 " + std::to_string(sweep) + ' ' +
           fmt(x2) + ' ' + fmt(y2) + "\"/>\n";
  }
  for (int k = 1; k <= n; ++k)
    out += "<text x=\"" + fmt(X(k) + 3) + "\" y=\"" + fmt(Y0 + 13) + "\">" + std::to_string(k) + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace straightknot
