#pragma once

#include <cstdio>
#include <string>

#include "equicover/covers.hpp"

namespace equicover {

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// Screen coordinates: y is flipped so counter-clockwise sweeps look
// counter-clockwise.
inline std::string xy(Point2 p) { return fmt(p.x) + "," + fmt(-p.y); }

inline Point2 at(Point2 apex, double angle, double radius) {
  return apex + radius * dir(angle);
}

/// Annular ring sector between radii r0 < r1 spanning [start, start+sweep].
inline std::string sector_path(Point2 apex, double start, double sweep, double r0, double r1) {
  sweep = std::min(sweep, kTwoPi - 1e-3);  // render full turns as almost-closed rings
  const int large = sweep > kPi ? 1 : 0;
  const Point2 a0 = at(apex, start, r1);
  const Point2 a1 = at(apex, start + sweep, r1);
  const Point2 b1 = at(apex, start + sweep, r0);
  const Point2 b0 = at(apex, start, r0);
  std::string d = "M " + xy(a0);
  d += " A " + fmt(r1) + " " + fmt(r1) + " 0 " + std::to_string(large) + " 0 " + xy(a1);
  d += " L " + xy(b1);
  d += " A " + fmt(r0) + " " + fmt(r0) + " 0 " + std::to_string(large) + " 1 " + xy(b0);
  d += " Z";
  return d;
}

inline const char* piece_color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return palette[i % 10];
}

struct SvgBuilder {
  std::string body;
  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;

  void grow(Point2 p, double margin = 0.0) {
    min_x = std::min(min_x, p.x - margin);
    max_x = std::max(max_x, p.x + margin);
    min_y = std::min(min_y, -p.y - margin);
    max_y = std::max(max_y, -p.y + margin);
  }

  void add_mass(const Mass& mass) {
    for (const WeightedPolygon& part : mass.parts) {
      std::string pts;
      for (const Point2& v : part.vertices) {
        if (!pts.empty()) pts += " ";
        pts += xy(v);
        grow(v);
      }
      body += "<polygon class=\"mass\" points=\"" + pts +
              "\" fill=\"#4a6fa5\" fill-opacity=\"0.35\" stroke=\"#2b4162\" "
              "stroke-width=\"0.5%\"/>\n";
    }
  }

  void add_rays(Point2 apex, const std::vector<double>& angles, double radius) {
    for (double a : angles) {
      const Point2 tip = at(apex, a, radius);
      grow(tip);
      body += "<line class=\"ray\" x1=\"" + fmt(apex.x) + "\" y1=\"" + fmt(-apex.y) +
              "\" x2=\"" + fmt(tip.x) + "\" y2=\"" + fmt(-tip.y) +
              "\" stroke=\"#888888\" stroke-width=\"0.2%\"/>\n";
    }
  }

  void add_piece(const Wedge& w, double r0, double r1, const char* color) {
    grow(w.apex, r1);
    body += "<path class=\"piece\" d=\"" + sector_path(w.apex, w.start, w.sweep, r0, r1) +
            "\" fill=\"" + color + "\" fill-opacity=\"0.45\" stroke=\"" + color +
            "\" stroke-width=\"0.3%\"/>\n";
  }

  std::string finish() const {
    const double pad = 0.05 * std::max(max_x - min_x, max_y - min_y) + 0.01;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fmt(min_x - pad) + " " +
           fmt(min_y - pad) + " " + fmt(max_x - min_x + 2 * pad) + " " +
           fmt(max_y - min_y + 2 * pad) + "\">\n" + body + "</svg>\n";
  }
};

inline double scene_scale(const Mass& mass) {
  const BoundingBox box = support_bbox(mass);
  return std::max(box.hi.x - box.lo.x, box.hi.y - box.lo.y) + 1e-6;
}

}  // namespace detail

inline std::string render_svg(const Mass& mass) {
  detail::SvgBuilder svg;
  svg.add_mass(mass);
  return svg.finish();
}

/// Pieces are drawn as annular ring sectors stacked outward in winding
/// order around their apex, echoing the disk diagrams used for
/// apex-centered covers.
inline std::string render_svg(const Mass& mass, const SpiralCover& cover) {
  detail::SvgBuilder svg;
  svg.add_mass(mass);
  const double scale = detail::scene_scale(mass);
  const double r0 = 0.08 * scale;
  const double band = 0.035 * scale;
  const std::size_t n = cover.pieces.size();
  svg.add_rays(cover.apex, cover.fan_rays, r0 + band * (n + 1));
  const bool doubled = cover.fan_rays.size() == 2 * n && n > 0;
  for (std::size_t i = 0; i < n; ++i) {
    // Doubled constructions carry one of two orbits; tint by orbit parity.
    const char* color = doubled ? (cover.orbit == OrbitTag::OrbitEven ? "#ff7f0e" : "#1f77b4")
                                : detail::piece_color(i);
    svg.add_piece(cover.pieces[i], r0 + band * i, r0 + band * (i + 0.85), color);
  }
  return svg.finish();
}

inline std::string render_svg(const Mass& mass, const GeneralCover& cover) {
  detail::SvgBuilder svg;
  svg.add_mass(mass);
  const double scale = detail::scene_scale(mass);
  const double r0 = 0.08 * scale;
  const double band = 0.035 * scale;
  // Rank pieces per apex so each family stacks outward independently.
  std::vector<int> rank(cover.pieces.size(), 0);
  for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
    int r = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const Point2 d = cover.pieces[j].apex - cover.pieces[i].apex;
      if (norm(d) < 1e-12) ++r;
    }
    rank[i] = r;
  }
  bool first_apex_set = false;
  Point2 first_apex;
  for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
    const Wedge& w = cover.pieces[i];
    if (!first_apex_set) {
      first_apex = w.apex;
      first_apex_set = true;
    }
    const bool same = norm(w.apex - first_apex) < 1e-12;
    const char* color = detail::piece_color(same ? rank[i] : rank[i] + 5);
    svg.add_piece(w, r0 + band * rank[i], r0 + band * (rank[i] + 0.85), color);
  }
  return svg.finish();
}

}  // namespace equicover
