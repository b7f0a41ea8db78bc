#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

#include "equicover/geometry.hpp"

namespace equicover {

/// Convex polygon with uniformly distributed total mass `weight`.
/// Vertices are in counter-clockwise order.
struct WeightedPolygon {
  std::vector<Point2> vertices;
  double weight = 0.0;
};

/// Planar probability mass modeled as a finite union of uniform-density
/// convex polygons. Parts may overlap; densities add. Every line has
/// measure zero by construction.
struct Mass {
  std::vector<WeightedPolygon> parts;
};

inline void validate(const WeightedPolygon& part) {
  if (part.vertices.size() < 3) {
    throw std::invalid_argument("mass part needs at least 3 vertices");
  }
  if (!(part.weight > 0.0)) {
    throw std::invalid_argument("mass part weight must be positive");
  }
  for (const Point2& v : part.vertices) {
    if (!std::isfinite(v.x) || !std::isfinite(v.y)) {
      throw std::invalid_argument("mass part has non-finite vertex");
    }
  }
  const std::size_t n = part.vertices.size();
  const double area = polygon_area(part.vertices);
  if (!(area > 0.0)) {
    throw std::invalid_argument("mass part must be counter-clockwise with positive area");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = part.vertices[i];
    const Point2 b = part.vertices[(i + 1) % n];
    const Point2 c = part.vertices[(i + 2) % n];
    if (cross(b - a, c - b) < -1e-12 * (1.0 + area)) {
      throw std::invalid_argument("mass part is not convex");
    }
  }
}

inline void validate(const Mass& mass) {
  if (mass.parts.empty()) throw std::invalid_argument("mass has no parts");
  double total = 0.0;
  for (const WeightedPolygon& part : mass.parts) {
    validate(part);
    total += part.weight;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("mass weights must sum to 1, got " + std::to_string(total));
  }
}

/// Axis-aligned bounding box of the support.
struct BoundingBox {
  Point2 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  Point2 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
};

inline BoundingBox support_bbox(const Mass& mass) {
  BoundingBox box;
  for (const WeightedPolygon& part : mass.parts) {
    for (const Point2& v : part.vertices) {
      box.lo.x = std::min(box.lo.x, v.x);
      box.lo.y = std::min(box.lo.y, v.y);
      box.hi.x = std::max(box.hi.x, v.x);
      box.hi.y = std::max(box.hi.y, v.y);
    }
  }
  return box;
}

namespace detail {

struct ClipScratch {
  std::vector<Point2> a, b;
};

inline ClipScratch& clip_scratch() {
  thread_local ClipScratch scratch;
  return scratch;
}

/// Measure of the intersection of `planes` with the mass.
inline double measure_intersection(const Mass& mass, std::span<const ClosedHalfPlane> planes) {
  ClipScratch& s = clip_scratch();
  double total = 0.0;
  for (const WeightedPolygon& part : mass.parts) {
    s.a.assign(part.vertices.begin(), part.vertices.end());
    for (const ClosedHalfPlane& h : planes) {
      clip_convex(s.a, h.normal, h.offset, s.b);
      s.a.swap(s.b);
      if (s.a.size() < 3) break;
    }
    if (s.a.size() < 3) continue;
    const double full = polygon_area(part.vertices);
    total += part.weight * (polygon_area(s.a) / full);
  }
  return total;
}

}  // namespace detail

/// mu-measure of a closed half-plane.
inline double measure_halfplane(const Mass& mass, const HalfPlane& h) {
  const ClosedHalfPlane nc = normal_form(h);
  return detail::measure_intersection(mass, std::span<const ClosedHalfPlane>(&nc, 1));
}

/// mu-measure of a wedge. Wedges wider than pi are split at start+pi into
/// two convex wedges; sweep >= 2*pi covers the whole plane.
inline double measure_wedge(const Mass& mass, const Wedge& w) {
  const double sweep = w.sweep;
  if (!(sweep > 0.0)) return 0.0;
  if (sweep >= kTwoPi) {
    double total = 0.0;
    for (const WeightedPolygon& part : mass.parts) total += part.weight;
    return total;
  }
  const auto convex_wedge = [&](double start, double s) {
    const Point2 u0 = dir(start);
    const Point2 u1 = dir(start + s);
    const ClosedHalfPlane planes[2] = {
        {{u0.y, -u0.x}, u0.y * w.apex.x - u0.x * w.apex.y},
        {{-u1.y, u1.x}, -u1.y * w.apex.x + u1.x * w.apex.y},
    };
    return detail::measure_intersection(mass, planes);
  };
  if (sweep <= kPi) return convex_wedge(w.start, sweep);
  return convex_wedge(w.start, kPi) + convex_wedge(w.start + kPi, sweep - kPi);
}

inline constexpr double kDefaultAngleTol = 1e-12;

/// Smallest winding angle theta >= theta0 such that the wedge swept from
/// theta0 to theta around `apex` has measure t. Angular gaps of zero
/// density resolve to the infimum. t must be in (0, 1].
inline double ray_at_measure(const Mass& mass, Point2 apex, double theta0, double t,
                             double angle_tol = kDefaultAngleTol) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("ray_at_measure: t must be in (0, 1]");
  }
  if (t > 1.0 + 1e-12) {
    throw std::runtime_error("quantile unreachable: requested measure " + std::to_string(t) +
                             " exceeds the total available within one turn");
  }
  t = std::min(t, 1.0);
  double lo = theta0;
  double hi = theta0 + kTwoPi;
  // Invariant: F(lo) < t <= F(hi) for the cumulative angular measure F.
  for (int it = 0; it < 64 && hi - lo > angle_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = measure_wedge(mass, {apex, theta0, mid - theta0});
    (f >= t ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace equicover
