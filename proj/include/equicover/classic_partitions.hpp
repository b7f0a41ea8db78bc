#pragma once

#include <array>
#include <optional>

#include "equicover/mass_model.hpp"

namespace equicover {

inline constexpr double kDefaultMeasureTol = 1e-9;

namespace detail {

struct OffsetRange {
  double lo = 0.0, hi = 0.0;
};

/// Range of dot(n, v) over all support vertices, slightly inflated.
inline OffsetRange offset_range(const Mass& mass, Point2 n) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const WeightedPolygon& part : mass.parts) {
    for (const Point2& v : part.vertices) {
      const double s = dot(n, v);
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  const double pad = 1e-9 * (1.0 + hi - lo);
  return {lo - pad, hi + pad};
}

inline double measure_below(const Mass& mass, Point2 n, double s) {
  const ClosedHalfPlane h{n, s};
  return measure_intersection(mass, std::span<const ClosedHalfPlane>(&h, 1));
}

}  // namespace detail

/// Offset s such that the half-plane {x : dot(n, x) <= s} has measure t,
/// for a unit normal n and t in (0, 1). When a whole interval of offsets
/// works (zero-density slab), returns its midpoint, which makes the result
/// independent of the direction the line is approached from.
inline double quantile_offset(const Mass& mass, Point2 n, double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::invalid_argument("quantile_offset: t must be in (0, 1)");
  }
  const auto [lo0, hi0] = detail::offset_range(mass, n);
  double lo = lo0, hi = hi0;
  for (int it = 0; it < 80 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    (detail::measure_below(mass, n, mid) >= t ? hi : lo) = mid;
  }
  const double s_inf = hi;
  lo = lo0;
  hi = hi0;
  for (int it = 0; it < 80 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    (detail::measure_below(mass, n, mid) <= t ? lo : hi) = mid;
  }
  const double s_sup = lo;
  return 0.5 * (s_inf + s_sup);
}

/// Line with the given direction whose left half-plane (relative to
/// dir(angle)) has measure t.
inline Line quantile_line(const Mass& mass, double angle, double t) {
  const Point2 u = dir(angle);
  const Point2 m{-u.y, u.x};
  // left measure = 1 - measure{dot(m, x) <= s}
  const double s = quantile_offset(mass, m, 1.0 - t);
  return make_line(s * m, angle);
}

struct DepthReport {
  Point2 point;
  double min_halfplane_measure = 0.0;
  int num_directions = 0;
};

/// Lower-bound estimate of Tukey depth: minimum measure over closed
/// half-planes through `point` with M equally spaced boundary directions
/// (both sides of each line are considered).
inline DepthReport depth(const Mass& mass, Point2 point, int M) {
  if (M < 8) throw std::invalid_argument("depth: M must be >= 8");
  double dmin = 1.0;
  for (int j = 0; j < M; ++j) {
    const double phi = kPi * j / M;
    const double left = measure_halfplane(mass, {{point, phi}, Side::Left});
    dmin = std::min({dmin, left, 1.0 - left});
  }
  return {point, std::max(dmin, 0.0), M};
}

/// Intersection of the M half-planes {x : dot(u_k, x) <= s_k} where s_k is
/// the (2/3 + slack)-quantile offset in direction u_k. Every point of the
/// polygon has sampled depth >= 1/3 - O(1/M). May be empty.
inline std::vector<Point2> centerpoint_region(const Mass& mass, int M, double slack = 0.0) {
  if (M < 8) throw std::invalid_argument("centerpoint_region: M must be >= 8");
  const BoundingBox box = support_bbox(mass);
  const double span = std::max(box.hi.x - box.lo.x, box.hi.y - box.lo.y) + 1.0;
  std::vector<Point2> poly{{box.lo.x - span, box.lo.y - span},
                           {box.hi.x + span, box.lo.y - span},
                           {box.hi.x + span, box.hi.y + span},
                           {box.lo.x - span, box.hi.y + span}};
  std::vector<Point2> next;
  for (int k = 0; k < M && poly.size() >= 3; ++k) {
    const Point2 u = dir(kTwoPi * k / M);
    const double s = quantile_offset(mass, u, 2.0 / 3.0 + slack);
    clip_convex(poly, u, s, next);
    poly.swap(next);
  }
  if (poly.size() < 3) poly.clear();
  return poly;
}

/// Approximate centerpoint: area centroid of the sampled 2/3-quantile
/// half-plane intersection. depth(result, M) >= 1/3 - O(1/M).
/// The area centroid is used instead of the vertex centroid because
/// tangent clips place polygon vertices with large tangential noise.
inline Point2 centerpoint(const Mass& mass, int M = 720) {
  std::vector<Point2> poly = centerpoint_region(mass, M);
  if (poly.empty()) poly = centerpoint_region(mass, M, 1e-9);
  if (poly.empty()) {
    throw std::runtime_error(
        "centerpoint: sampled quantile half-plane intersection is empty; "
        "increase M or loosen the quantile");
  }
  double area = 0.0;
  Point2 c{0.0, 0.0};
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double w = cross(poly[j], poly[i]);
    area += w;
    c = c + w * (poly[j] + poly[i]);
  }
  if (std::abs(area) < 1e-30) {  // degenerate sliver: fall back to vertex mean
    c = {0.0, 0.0};
    for (const Point2& v : poly) c = c + v;
    return (1.0 / static_cast<double>(n)) * c;
  }
  return (1.0 / (3.0 * area)) * c;
}

/// Three concurrent lines through `apex` splitting the plane into six
/// regions of measures (a, b, c, a, b, c) counter-clockwise. Rays satisfy
/// rays[j+3] = rays[j] + pi exactly.
struct SixPartition {
  Point2 apex;
  std::array<double, 6> rays{};     // winding angles m1..m6
  std::array<double, 3> targets{};  // (a, b, c)
};

/// Measure of region j (0-based) of a six-partition.
inline double six_region_measure(const Mass& mass, const SixPartition& part, int j) {
  const double start = part.rays[j];
  const double end = j + 1 < 6 ? part.rays[j + 1] : part.rays[0] + kTwoPi;
  if (end - start <= 0.0) return 0.0;
  return measure_wedge(mass, {part.apex, start, end - start});
}

namespace detail {

/// Signed offset of the halving line orthogonal to left_normal(theta).
inline double halving_offset(const Mass& mass, double theta) {
  const Point2 u = dir(theta);
  return quantile_offset(mass, {-u.y, u.x}, 0.5);
}

/// Intersection of two halving lines given as (direction, offset) pairs;
/// empty when nearly parallel.
inline std::optional<Point2> halving_intersection(double theta1, double off1, double theta2,
                                                  double off2) {
  const Point2 u1 = dir(theta1);
  const Point2 u2 = dir(theta2);
  const Point2 m1{-u1.y, u1.x};
  const Point2 m2{-u2.y, u2.x};
  const double den = cross(m1, m2);
  if (std::abs(den) < 1e-9) return std::nullopt;
  return Point2{(off1 * m2.y - off2 * m1.y) / den, (off2 * m1.x - off1 * m2.x) / den};
}

/// Measure of the half-plane to the left of the directed angle through O.
inline double left_measure(const Mass& mass, Point2 o, double theta) {
  const Point2 u = dir(theta);
  const ClosedHalfPlane h{{u.y, -u.x}, u.y * o.x - u.x * o.y};
  return measure_intersection(mass, std::span<const ClosedHalfPlane>(&h, 1));
}

/// Lazy cache of halving-line offsets over a fixed direction grid.
class HalvingGrid {
 public:
  HalvingGrid(const Mass& mass, int n) : mass_(mass), offsets_(n) {}

  int size() const { return static_cast<int>(offsets_.size()); }
  double angle(int k) const { return kTwoPi * k / size(); }

  double offset(int k) {
    if (!offsets_[k]) offsets_[k] = halving_offset(mass_, angle(k));
    return *offsets_[k];
  }

 private:
  const Mass& mass_;
  std::vector<std::optional<double>> offsets_;
};

/// All three lines of a (a, b, c, a, b, c) partition are halving lines, so
/// the search runs on the halving-line manifold: theta1 and theta2 pick
/// two halving lines meeting at O, theta2 is solved so the first wedge
/// carries a, the third ray is placed by measure, and the residual is how
/// far the third line is from halving.
struct BBGSearch {
  BBGSearch(const Mass& mass_, double a_, double b_, double c_, double tol_)
      : mass(mass_), a(a_), b(b_), c(c_), tol(tol_) {}

  const Mass& mass;
  double a, b, c, tol;
  std::optional<SixPartition> best;
  double best_err = std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, double>> seeds;  // (theta1, theta2) of the best few

  double measured_error(const SixPartition& part) const {
    double err = 0.0;
    for (int j = 0; j < 6; ++j) {
      err = std::max(err,
                     std::abs(six_region_measure(mass, part, j) - part.targets[j % 3]));
    }
    return err;
  }

  /// Registers a candidate; returns its measured error (infinity when the
  /// ray ordering is invalid).
  double consider(double theta1, double theta2, double theta3, Point2 apex) {
    if (!(theta1 < theta2 && theta2 <= theta3 && theta3 <= theta1 + kPi + 1e-9)) {
      return std::numeric_limits<double>::infinity();
    }
    const SixPartition part{
        apex,
        {theta1, theta2, theta3, theta1 + kPi, theta2 + kPi, theta3 + kPi},
        {a, b, c}};
    const double err = measured_error(part);
    if (err < best_err) {
      best_err = err;
      best = part;
      seeds.insert(seeds.begin(), {theta1, theta2});
      if (seeds.size() > 4) seeds.resize(4);
    }
    return err;
  }
};

struct ThirdLineEval {
  double g = 0.0;      // mu(wedge(theta1 -> theta2)) - a
  double h = 0.0;      // left measure of the third line - 1/2
  double theta3 = 0.0;
  Point2 apex;
  bool valid = false;
};

inline ThirdLineEval bbg_eval(const Mass& mass, double a, double theta1, double off1,
                              double theta2, double off2) {
  ThirdLineEval e;
  const auto apex = halving_intersection(theta1, off1, theta2, off2);
  if (!apex) return e;
  e.apex = *apex;
  e.valid = true;
  e.g = measure_wedge(mass, {*apex, theta1, theta2 - theta1}) - a;
  return e;
}

inline void bbg_complete(const Mass& mass, double b, double theta2, ThirdLineEval& e) {
  e.theta3 = b > 1e-15 ? ray_at_measure(mass, e.apex, theta2, b) : theta2;
  e.h = left_measure(mass, e.apex, e.theta3) - 0.5;
}

/// For fixed theta1, finds up to `max_roots` theta2 values (smallest
/// first) where the first wedge carries exactly a, and evaluates the
/// halving residual of the induced third line at each.
inline std::vector<std::pair<double, ThirdLineEval>> bbg_inner_roots(
    const Mass& mass, double a, double b, double theta1, double off1, HalvingGrid& grid,
    int max_roots) {
  std::vector<std::pair<double, ThirdLineEval>> roots;
  const int n = grid.size();
  const double margin = std::min(0.01, kPi / n);
  // grid points with direction strictly between theta1 and theta1 + pi
  std::vector<std::pair<double, int>> gaps;
  for (int k = 0; k < n; ++k) {
    const double gap = wrap_two_pi(grid.angle(k) - theta1);
    if (gap > margin && gap < kPi - margin) gaps.push_back({gap, k});
  }
  std::sort(gaps.begin(), gaps.end());

  double prev_gap = 0.0;
  ThirdLineEval prev;
  bool have_prev = false;
  for (const auto& [gap, k] : gaps) {
    ThirdLineEval cur = bbg_eval(mass, a, theta1, off1, theta1 + gap, grid.offset(k));
    if (!cur.valid) {
      have_prev = false;
      continue;
    }
    if (std::abs(cur.g) <= 1e-13) {
      bbg_complete(mass, b, theta1 + gap, cur);
      roots.push_back({theta1 + gap, cur});
    } else if (have_prev && prev.g * cur.g < 0.0) {
      double lo = prev_gap, hi = gap, g_lo = prev.g;
      ThirdLineEval at = std::abs(prev.g) < std::abs(cur.g) ? prev : cur;
      double at_gap = std::abs(prev.g) < std::abs(cur.g) ? prev_gap : gap;
      for (int it = 0; it < 52 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        ThirdLineEval e =
            bbg_eval(mass, a, theta1, off1, theta1 + mid, halving_offset(mass, theta1 + mid));
        if (!e.valid) break;
        if (std::abs(e.g) < std::abs(at.g)) {
          at = e;
          at_gap = mid;
        }
        if (std::abs(e.g) <= 1e-13) break;
        if (e.g * g_lo <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          g_lo = e.g;
        }
      }
      bbg_complete(mass, b, theta1 + at_gap, at);
      roots.push_back({theta1 + at_gap, at});
    }
    if (static_cast<int>(roots.size()) >= max_roots) break;
    prev_gap = gap;
    prev = cur;
    have_prev = true;
  }
  return roots;
}

/// One full evaluation at a direction pair: both halving lines fresh, the
/// third ray by measure. Registers the candidate and returns its measured
/// error (infinity when the configuration is invalid).
inline double bbg_pair_error(const Mass& mass, BBGSearch& search, double theta1,
                             double theta2) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (!(theta2 > theta1 && theta2 < theta1 + kPi)) return kInf;
  ThirdLineEval e = bbg_eval(mass, search.a, theta1, halving_offset(mass, theta1),
                             theta2, halving_offset(mass, theta2));
  if (!e.valid) return kInf;
  bbg_complete(mass, search.b, theta2, e);
  return search.consider(theta1, theta2, e.theta3, e.apex);
}

/// Local coordinate descent on (theta1, theta2) minimizing the measured
/// region error; refines a candidate into the acceptance basin.
inline void bbg_polish(const Mass& mass, BBGSearch& search, double theta1, double theta2,
                       double step, double accept) {
  double here = bbg_pair_error(mass, search, theta1, theta2);
  while (step > 1e-14 && search.best_err > accept) {
    bool improved = false;
    const double moves[4][2] = {{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}};
    for (const auto& mv : moves) {
      const double err = bbg_pair_error(mass, search, theta1 + mv[0], theta2 + mv[1]);
      if (err < here) {
        theta1 += mv[0];
        theta2 += mv[1];
        here = err;
        improved = true;
        break;
      }
    }
    if (!improved) step *= 0.5;
  }
}

/// One resolution level of the main search: grid scan over the first
/// direction with all wedge-roots per point, bisection of the third-line
/// halving residual along each root branch, then local polish of the best
/// direction pairs. Stops early once search.best_err <= accept.
inline void bbg_scan_level(const Mass& mass, BBGSearch& search, int n, double accept) {
  constexpr int kMaxRoots = 6;
  HalvingGrid grid(mass, n);
  std::vector<std::array<std::optional<double>, kMaxRoots>> h_at(n);
  for (int k = 0; k < n; ++k) {
    const double theta1 = grid.angle(k);
    const auto roots =
        bbg_inner_roots(mass, search.a, search.b, theta1, grid.offset(k), grid, kMaxRoots);
    for (std::size_t ri = 0; ri < roots.size(); ++ri) {
      const auto& [theta2, e] = roots[ri];
      h_at[k][ri] = e.h;
      search.consider(theta1, theta2, e.theta3, e.apex);
      if (search.best_err <= accept) return;
    }
  }
  // bisect theta1 across sign changes of the third-line halving residual,
  // branch by branch (root ordinal)
  for (int ri = 0; ri < kMaxRoots; ++ri) {
    for (int k = 0; k < n; ++k) {
      const int k2 = (k + 1) % n;
      if (!h_at[k][ri] || !h_at[k2][ri]) continue;
      if (*h_at[k][ri] * *h_at[k2][ri] >= 0.0) continue;
      double lo = grid.angle(k), hi = grid.angle(k) + kTwoPi / n;
      double h_lo = *h_at[k][ri];
      for (int it = 0; it < 52 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const auto roots = bbg_inner_roots(mass, search.a, search.b, mid,
                                           halving_offset(mass, mid), grid, ri + 1);
        if (static_cast<int>(roots.size()) <= ri) break;
        const auto& [theta2, e] = roots[ri];
        search.consider(mid, theta2, e.theta3, e.apex);
        if (search.best_err <= accept) return;
        if (e.h * h_lo <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          h_lo = e.h;
        }
      }
    }
  }
  // local polish around the most promising direction pairs
  const auto seeds = search.seeds;
  for (const auto& [t1, t2] : seeds) {
    bbg_polish(mass, search, t1, t2, kTwoPi / n, accept);
    if (search.best_err <= accept) return;
  }
}

/// Degenerate targets with c = 0: only two distinct halving lines are
/// needed and any first direction works; the first wedge carries a.
inline std::optional<SixPartition> bbg_two_lines(const Mass& mass, double a, double b,
                                                 double accept) {
  HalvingGrid grid(mass, 96);
  BBGSearch search{mass, a, b, 0.0, accept};
  for (int k = 0; k < grid.size(); ++k) {
    const double theta1 = grid.angle(k);
    const double off1 = grid.offset(k);
    const auto roots = bbg_inner_roots(mass, a, b, theta1, off1, grid, 2);
    for (const auto& [theta2, e] : roots) {
      search.consider(theta1, theta2, theta1 + kPi, e.apex);
      if (search.best_err <= accept) return search.best;
    }
  }
  return search.best_err <= 10 * accept ? search.best : std::nullopt;
}

}  // namespace detail

/// Six-region partition by three concurrent lines with counter-clockwise
/// measures (a, b, c, a, b, c), a + b + c = 1/2. All three lines are
/// necessarily halving lines, so the solver scans pairs of halving-line
/// directions: the second direction is bisected so the first wedge
/// carries a, the third ray is placed by measure, and its line's halving
/// residual is driven to zero by bisection over the first direction.
inline SixPartition buck_buck(const Mass& mass, double a, double b, double c,
                              double tol = kDefaultMeasureTol) {
  if (a < 0.0 || b < 0.0 || c < 0.0) {
    throw std::invalid_argument("buck_buck: targets must be nonnegative");
  }
  if (std::abs(a + b + c - 0.5) > 1e-12) {
    throw std::invalid_argument("buck_buck: targets must sum to 1/2");
  }
  const double accept = std::min(tol, 1e-10);

  // Degenerate triples collapse lines; solve a rotated triple with the
  // zero in the last slot and shift region labels back.
  const double targets[3] = {a, b, c};
  int n_zero = 0, zero_at = -1;
  for (int i = 0; i < 3; ++i) {
    if (targets[i] <= 1e-15) {
      ++n_zero;
      if (zero_at < 0) zero_at = i;
    }
  }
  const auto relabel = [&](const SixPartition& solved, int rot) {
    if (rot == 0) {
      SixPartition out = solved;
      out.targets = {a, b, c};
      return out;
    }
    std::array<double, 6> m;
    const int o = (6 - rot) % 6;
    m[0] = solved.rays[o];
    for (int j = 1; j < 3; ++j) {
      double gap = wrap_two_pi(solved.rays[(o + j) % 6] - solved.rays[(o + j - 1) % 6]);
      if (gap > 1.5 * kPi) gap = 0.0;  // wrap noise on a zero gap
      m[j] = m[j - 1] + gap;
    }
    for (int j = 3; j < 6; ++j) m[j] = m[j - 3] + kPi;
    return SixPartition{solved.apex, m, {a, b, c}};
  };
  if (n_zero >= 2) {
    // some rotation of (1/2, 0, 0): a single halving line, apex at its
    // crossing with the perpendicular halving line
    int big = 0;
    while (targets[big] <= 1e-15) ++big;
    const auto apex = detail::halving_intersection(0.0, detail::halving_offset(mass, 0.0),
                                                   kPi / 2, detail::halving_offset(mass, kPi / 2));
    if (!apex) throw std::runtime_error("buck_buck: degenerate halving intersection");
    const SixPartition base{*apex, {0.0, kPi, kPi, kPi, kTwoPi, kTwoPi}, {0.5, 0.0, 0.0}};
    return relabel(base, big);
  }
  if (n_zero == 1) {
    const int rot = (zero_at + 1) % 3;  // left-rotate so the zero lands in slot c
    const double ra = targets[rot % 3];
    const double rb = targets[(rot + 1) % 3];
    const auto solved = detail::bbg_two_lines(mass, ra, rb, accept);
    if (!solved) throw std::runtime_error("buck_buck: degenerate search failed");
    SixPartition out = relabel(*solved, rot);
    out.targets = {a, b, c};
    return out;
  }

  // The scan parametrizes by the direction of ray m1. For clustered
  // masses that ray can be pinned to a narrow direction window while
  // another ray is free, so the search also runs on the rotated triples
  // (b, c, a) and (c, a, b), whose scans start at m2 and m3, and shifts
  // the region labels back afterwards.
  std::optional<SixPartition> best_part;
  double best_err = std::numeric_limits<double>::infinity();
  for (const int n : {96, 384}) {
    for (int rot = 0; rot < 3; ++rot) {
      detail::BBGSearch search{mass, targets[rot], targets[(rot + 1) % 3],
                               targets[(rot + 2) % 3], tol};
      detail::bbg_scan_level(mass, search, n, accept);
      if (search.best && search.best_err < best_err) {
        best_err = search.best_err;
        best_part = relabel(*search.best, rot);
      }
      if (best_err <= accept) return *best_part;
    }
    if (best_err <= tol) return *best_part;
  }
  if (best_err <= tol) return *best_part;
  throw std::runtime_error("buck_buck: residual " + std::to_string(best_err) +
                           " exceeds tolerance after search budget");
}

namespace detail {

struct DirectedCrossLine {
  double sigma = 0.0;     // directed angle of the found line
  double offset = 0.0;    // line is {x : dot(left_normal(sigma), x) = offset}
  Line line;
};

/// Finds a line with measure t_right on the right of its direction and
/// t_top_right on (right of line) ∩ (left of theta_h through offset
/// s_half). The direction is swept over (theta_h, theta_h + pi).
inline DirectedCrossLine cross_quantile_directed(const Mass& mass, double theta_h,
                                                 double s_half, double t_right,
                                                 double t_top_right, double tol) {
  // top half-plane: dot(m_h, x) >= s_half with m_h the left normal of u_h
  const Point2 u_h = dir(theta_h);
  const Point2 m_h{-u_h.y, u_h.x};
  const ClosedHalfPlane top_nc{{-m_h.x, -m_h.y}, -s_half};

  struct EvalResult {
    double g = 0.0;
    double offset = 0.0;
  };
  const auto eval = [&](double sigma) {
    const Point2 u = dir(sigma);
    const Point2 m{-u.y, u.x};
    // right of the directed line: {x : dot(m, x) <= s}
    const double s = quantile_offset(mass, m, t_right);
    const ClosedHalfPlane planes[2] = {{m, s}, top_nc};
    return EvalResult{measure_intersection(mass, planes) - t_top_right, s};
  };
  const auto to_result = [&](double sigma, double offset) {
    const Point2 m{-std::sin(sigma), std::cos(sigma)};
    return DirectedCrossLine{sigma, offset, make_line(offset * m, sigma)};
  };

  constexpr int kGrid = 64;
  const double g_goal = std::min(tol * 1e-2, 1e-11);
  double prev_sigma = 0.0;
  EvalResult prev{};
  bool have_prev = false;
  double g_min = 1.0, g_max = -1.0;
  for (int i = 1; i < kGrid; ++i) {
    const double sigma = theta_h + kPi * i / kGrid;
    const EvalResult cur = eval(sigma);
    g_min = std::min(g_min, cur.g);
    g_max = std::max(g_max, cur.g);
    if (std::abs(cur.g) <= g_goal) return to_result(sigma, cur.offset);
    if (have_prev && prev.g * cur.g < 0.0) {
      double lo = prev_sigma, hi = sigma, g_lo = prev.g;
      EvalResult at{};
      double at_sigma = sigma;
      at = cur;
      for (int it = 0; it < 64; ++it) {
        const double mid = 0.5 * (lo + hi);
        const EvalResult e = eval(mid);
        if (std::abs(e.g) < std::abs(at.g)) {
          at = e;
          at_sigma = mid;
        }
        if (std::abs(e.g) <= g_goal) break;
        if (e.g * g_lo <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          g_lo = e.g;
        }
      }
      if (std::abs(at.g) <= tol) return to_result(at_sigma, at.offset);
    }
    prev_sigma = sigma;
    prev = cur;
    have_prev = true;
  }
  throw std::runtime_error(
      "cross_quantile_line: no sign change over the direction sweep "
      "(residual range [" +
      std::to_string(g_min) + ", " + std::to_string(g_max) + "])");
}

}  // namespace detail

/// Line, not parallel to hline, whose right side (relative to its swept
/// direction) has measure t_right, with (right side) ∩ (left of
/// hline.angle) of measure t_top_right.
inline Line cross_quantile_line(const Mass& mass, const Line& hline, double t_right,
                                double t_top_right, double tol = kDefaultMeasureTol) {
  if (!(t_top_right > 0.0 && t_top_right < t_right && t_right < 1.0)) {
    throw std::invalid_argument("cross_quantile_line: need 0 < t_top_right < t_right < 1");
  }
  const double half = measure_halfplane(mass, {hline, Side::Left});
  if (std::abs(half - 0.5) > 1e-6) {
    throw std::invalid_argument("cross_quantile_line: hline must split the mass 1/2-1/2");
  }
  const Point2 u = dir(hline.angle);
  const Point2 m_h{-u.y, u.x};
  const double s_half = dot(m_h, hline.point);
  return detail::cross_quantile_directed(mass, hline.angle, s_half, t_right, t_top_right, tol)
      .line;
}

}  // namespace equicover
