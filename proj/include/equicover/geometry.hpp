#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace equicover {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

/// Unit direction vector of an angle (radians).
inline Point2 dir(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// Wraps an angle into [0, 2*pi).
inline double wrap_two_pi(double a) {
  double r = std::fmod(a, kTwoPi);
  return r < 0.0 ? r + kTwoPi : r;
}

/// Wraps an undirected line angle into [0, pi).
inline double wrap_line_angle(double a) {
  double r = std::fmod(a, kPi);
  return r < 0.0 ? r + kPi : r;
}

/// Ray from an origin; the angle is a winding coordinate and is not
/// normalized, so constructions may wind past a full turn.
struct Ray {
  Point2 origin;
  double angle = 0.0;
};

/// Undirected line; angle normalized to [0, pi).
struct Line {
  Point2 point;
  double angle = 0.0;
};

inline Line make_line(Point2 point, double angle) {
  return {point, wrap_line_angle(angle)};
}

enum class Side { Left, Right };

/// Closed half-plane: the side is taken relative to the direction
/// dir(boundary.angle).
struct HalfPlane {
  Line boundary;
  Side side = Side::Left;
};

/// Closed half-plane in normal form {x : dot(normal, x) <= offset}.
struct ClosedHalfPlane {
  Point2 normal;
  double offset = 0.0;
};

inline ClosedHalfPlane normal_form(const HalfPlane& h) {
  const Point2 u = dir(h.boundary.angle);
  const Point2 m{-u.y, u.x};  // left normal of the direction
  if (h.side == Side::Left) {
    // cross(u, x - p) >= 0  <=>  dot(-m, x) <= dot(-m, p)
    return {{-m.x, -m.y}, -dot(m, h.boundary.point)};
  }
  return {m, dot(m, h.boundary.point)};
}

inline HalfPlane complement(const HalfPlane& h) {
  return {h.boundary, h.side == Side::Left ? Side::Right : Side::Left};
}

/// Region swept counter-clockwise from `start` by `sweep` radians around
/// `apex`. `start` is a winding coordinate; membership reduces mod 2*pi.
/// Convex iff sweep <= pi.
struct Wedge {
  Point2 apex;
  double start = 0.0;
  double sweep = 0.0;  // in (0, 2*pi]
};

inline bool wedge_contains(const Wedge& w, Point2 p) {
  const double phi = std::atan2(p.y - w.apex.y, p.x - w.apex.x);
  return wrap_two_pi(phi - w.start) <= w.sweep;
}

/// Intersection point of two lines; throws if they are (nearly) parallel.
inline Point2 line_intersection(const Line& a, const Line& b) {
  const Point2 u = dir(a.angle);
  const Point2 v = dir(b.angle);
  const double den = cross(u, v);
  if (std::abs(den) < 1e-14) {
    throw std::runtime_error("line_intersection: lines are parallel");
  }
  const double t = cross(b.point - a.point, v) / den;
  return a.point + t * u;
}

/// Signed area of a polygon (positive when counter-clockwise).
inline double polygon_area(const std::vector<Point2>& poly) {
  double twice = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    twice += cross(poly[j], poly[i]);
  }
  return 0.5 * twice;
}

/// Clips a convex polygon by the closed half-plane {x : dot(n, x) <= c}.
/// Output is convex (possibly empty); `out` is overwritten.
inline void clip_convex(const std::vector<Point2>& in, Point2 n, double c,
                        std::vector<Point2>& out) {
  out.clear();
  const std::size_t m = in.size();
  if (m == 0) return;
  Point2 prev = in[m - 1];
  double d_prev = dot(n, prev) - c;
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 cur = in[i];
    const double d_cur = dot(n, cur) - c;
    if ((d_prev <= 0.0) != (d_cur <= 0.0)) {
      const double t = d_prev / (d_prev - d_cur);
      out.push_back({prev.x + t * (cur.x - prev.x), prev.y + t * (cur.y - prev.y)});
    }
    if (d_cur <= 0.0) out.push_back(cur);
    prev = cur;
    d_prev = d_cur;
  }
}

}  // namespace equicover
