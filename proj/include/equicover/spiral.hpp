#pragma once

#include <optional>

#include "equicover/classic_partitions.hpp"
#include "equicover/covers.hpp"
#include "equicover/verify.hpp"

namespace equicover {

/// Feasibility regime of a reduced pair (p, q): which construction (if
/// any) is guaranteed to produce a convex (q,p)-spiral equicovering.
inline Regime classify_regime(int p, int q) {
  require_reduced(p, q);
  if (q < 2 * p) return Regime::InfeasibleAllMasses;
  if (q == 3 * p - 3) {
    return p % 2 == 1 ? Regime::Guaranteed3pMinus3 : Regime::OpenEvenCase;
  }
  if (q < 3 * p - 3) return Regime::ExistsBadMass;
  if (q == 3 * p - 2) return Regime::Guaranteed3pMinus2;
  if (q == 3 * p - 1) {
    return p >= 2 ? Regime::Guaranteed3pMinus1 : Regime::TrivialHalving;  // (1,2)
  }
  return Regime::GuaranteedCenterpoint;  // q >= 3p
}

namespace detail {

/// Fan whose rays r-th, 2r-th, ... anchors coincide with the given six
/// rays exactly; interior rays are placed by repeated measure steps, so
/// each region contributes counts[j] wedges of measure `unit`.
inline FanConstruction anchored_fan(const Mass& mass, Point2 apex,
                                    const std::array<double, 6>& anchors,
                                    const std::array<int, 6>& counts, double unit) {
  std::vector<double> rays;
  int total = 0;
  for (int c : counts) total += c;
  rays.reserve(total);
  for (int j = 0; j < 6; ++j) {
    rays.push_back(anchors[j]);
    for (int t = 1; t < counts[j]; ++t) {
      rays.push_back(ray_at_measure(mass, apex, rays.back(), unit));
    }
  }
  return {apex, std::move(rays), unit};
}

inline SpiralCover finalize_cover(const Mass& mass, SpiralCover cover, double tol,
                                  const char* what) {
  const VerifyReport report = verify_spiral(mass, cover, tol);
  if (!report.passed()) {
    throw std::runtime_error(std::string(what) + ": verification failed (" +
                             report.failures.front().detail + ")");
  }
  return cover;
}

}  // namespace detail

/// (1,2): two closed half-planes bounded by one halving line. The apex is
/// placed at the crossing of the horizontal and vertical halving lines.
/// The rays are the two directions of the halving line itself, so both
/// pieces have sweep exactly pi even across zero-density angular gaps.
inline SpiralCover construct_trivial_halving(const Mass& mass, double tol = 1e-8) {
  const double y0 = quantile_offset(mass, {0.0, 1.0}, 0.5);
  const double x0 = -quantile_offset(mass, {-1.0, 0.0}, 0.5);
  const Point2 apex{x0, y0};
  SpiralCover cover{{1, 2},
                    apex,
                    {0.0, kPi},
                    {{apex, 0.0, kPi}, {apex, kPi, kPi}},
                    OrbitTag::Single};
  return detail::finalize_cover(mass, std::move(cover), tol, "construct_trivial_halving");
}

/// q >= 3p: basic construction around a centerpoint. Every p-wedge stays
/// inside the half-plane swept from its initial ray, hence is convex.
inline SpiralCover construct_centerpoint_spiral(const Mass& mass, int p, int q,
                                                int M = 720, double tol = 1e-8) {
  require_reduced(p, q);
  if (q < 3 * p) {
    throw std::invalid_argument("construct_centerpoint_spiral: requires q >= 3p");
  }
  std::string last_error;
  for (const int m : {M, 4 * M}) {
    const Point2 apex = centerpoint(mass, m);
    FanConstruction fan = basic_construction(mass, apex, 0.0, q);
    SpiralCover cover{{p, q}, apex, fan.ray_angles, p_wedges(fan, p), OrbitTag::Single};
    const VerifyReport report = verify_spiral(mass, cover, tol);
    if (report.passed()) return cover;
    last_error = report.failures.front().detail;
  }
  throw std::runtime_error("construct_centerpoint_spiral: verification failed after retry (" +
                           last_error + ")");
}

/// q = 3p - 3, p odd: six-partition with a = b = c = 1/6, then a fan of
/// q = 6r rays anchored at the partition rays. Each p-wedge spans at most
/// three consecutive regions and therefore lies in a half-plane.
inline SpiralCover construct_3p_minus_3(const Mass& mass, int p, double tol = 1e-8) {
  const int q = 3 * p - 3;
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("construct_3p_minus_3: p must be odd and >= 3");
  }
  require_reduced(p, q);  // rejects p divisible by 3
  const int r = (p - 1) / 2;
  const SixPartition six = buck_buck(mass, 1.0 / 6, 1.0 / 6, 1.0 / 6, std::min(tol, 1e-9));
  FanConstruction fan =
      detail::anchored_fan(mass, six.apex, six.rays, {r, r, r, r, r, r}, 1.0 / q);
  SpiralCover cover{{p, q}, six.apex, fan.ray_angles, p_wedges(fan, p), OrbitTag::Single};
  return detail::finalize_cover(mass, std::move(cover), tol, "construct_3p_minus_3");
}

/// q = 3p - 1: doubled construction with wedge measure 1/(2q) anchored at
/// a six-partition with a = r/(6r+4), b = c = (r+1)/(6r+4). The 2q
/// (2p)-wedges split into two orbits; either is a valid cover, the odd
/// orbit is returned for determinism.
inline SpiralCover construct_3p_minus_1(const Mass& mass, int p, double tol = 1e-8) {
  const int q = 3 * p - 1;
  if (p < 2) throw std::invalid_argument("construct_3p_minus_1: p must be >= 2");
  require_reduced(p, q);
  const int r = p - 1;
  const double unit = 1.0 / (2 * q);
  const SixPartition six =
      buck_buck(mass, r * unit, (r + 1) * unit, (r + 1) * unit, std::min(tol, 1e-9));
  FanConstruction fan = detail::anchored_fan(mass, six.apex, six.rays,
                                             {r, r + 1, r + 1, r, r + 1, r + 1}, unit);
  SpiralCover cover{{p, q}, six.apex, fan.ray_angles, p_wedges(fan, 2 * p, 2, 1),
                    OrbitTag::OrbitOdd};
  return detail::finalize_cover(mass, std::move(cover), tol, "construct_3p_minus_1");
}

/// Sweeps of the two orbit-critical (2p)-wedges in the q = 3p - 2
/// construction; all other wedges are confined to three consecutive
/// regions, but these two may not be. They are disjoint, so at least one
/// has angle <= pi.
struct OrbitDiagnostics {
  Wedge critical_odd;
  Wedge critical_even;
  double odd_sweep = 0.0;
  double even_sweep = 0.0;
};

/// q = 3p - 2 (p odd): doubled construction with a = b = 2r/(12r+2),
/// c = (2r+1)/(12r+2); returns whichever orbit's critical wedge is convex
/// (ties favor the odd orbit).
inline SpiralCover construct_3p_minus_2(const Mass& mass, int p, double tol = 1e-8,
                                        OrbitDiagnostics* diagnostics = nullptr) {
  const int q = 3 * p - 2;
  if (p < 3 || p % 2 == 0) {
    throw std::invalid_argument("construct_3p_minus_2: p must be odd and >= 3");
  }
  require_reduced(p, q);
  const int r = (p - 1) / 2;
  const double unit = 1.0 / (2 * q);
  const SixPartition six =
      buck_buck(mass, 2 * r * unit, 2 * r * unit, (2 * r + 1) * unit, std::min(tol, 1e-9));
  FanConstruction fan = detail::anchored_fan(
      mass, six.apex, six.rays, {2 * r, 2 * r, 2 * r + 1, 2 * r, 2 * r, 2 * r + 1}, unit);

  const int span = 4 * r + 2;  // 2p base wedges per piece
  const auto critical = [&](int start) {
    const double s0 = fan_ray_angle(fan, start);
    return Wedge{six.apex, s0, fan_ray_angle(fan, start + span) - s0};
  };
  const Wedge w_odd = critical(6 * r + 1);
  const Wedge w_even = critical(12 * r + 2);
  if (diagnostics) *diagnostics = {w_odd, w_even, w_odd.sweep, w_even.sweep};

  OrbitTag orbit;
  if (w_odd.sweep <= kPi + kConvexSweepSlack) {
    orbit = OrbitTag::OrbitOdd;
  } else if (w_even.sweep <= kPi + kConvexSweepSlack) {
    orbit = OrbitTag::OrbitEven;
  } else {
    throw std::runtime_error(
        "construct_3p_minus_2: both critical wedges exceed pi; numerical failure");
  }
  const int first = orbit == OrbitTag::OrbitOdd ? 1 : 2;
  SpiralCover cover{{p, q}, six.apex, fan.ray_angles, p_wedges(fan, 2 * p, 2, first), orbit};
  return detail::finalize_cover(mass, std::move(cover), tol, "construct_3p_minus_2");
}

struct SearchBudget {
  int apexes = 12;
  int angles = 16;
};

struct SearchReport {
  long attempts = 0;
  double min_worst_sweep = std::numeric_limits<double>::infinity();
  Point2 best_apex;
  double best_theta0 = 0.0;
};

enum class ConstructOutcome { Cover, Infeasible, Unknown };

struct ConstructResult {
  ConstructOutcome outcome = ConstructOutcome::Unknown;
  Regime regime{};
  std::optional<SpiralCover> cover;
  std::string reason;
  std::optional<SearchReport> search;
};

/// Grid search over apex candidates (inside and around the sampled
/// centerpoint region) and initial ray angles. Returns the first fully
/// verified cover in lexicographic grid order, else the best attempt.
inline ConstructResult heuristic_search(const Mass& mass, int p, int q,
                                        SearchBudget budget = {}, double tol = 1e-8) {
  require_reduced(p, q);
  std::vector<Point2> region = centerpoint_region(mass, 180);
  if (region.empty()) region = centerpoint_region(mass, 180, 1e-9);
  Point2 center;
  double half_x = 0.0, half_y = 0.0;
  if (region.empty()) {
    const BoundingBox box = support_bbox(mass);
    center = 0.5 * (box.lo + box.hi);
    half_x = 0.5 * (box.hi.x - box.lo.x);
    half_y = 0.5 * (box.hi.y - box.lo.y);
  } else {
    BoundingBox box;
    for (const Point2& v : region) {
      box.lo.x = std::min(box.lo.x, v.x);
      box.lo.y = std::min(box.lo.y, v.y);
      box.hi.x = std::max(box.hi.x, v.x);
      box.hi.y = std::max(box.hi.y, v.y);
    }
    center = 0.5 * (box.lo + box.hi);
    half_x = box.hi.x - box.lo.x + 1e-3;  // 2x inflation covers "around it"
    half_y = box.hi.y - box.lo.y + 1e-3;
  }

  ConstructResult result;
  result.regime = classify_regime(p, q);
  result.search = SearchReport{};
  const int grid = std::max(1, static_cast<int>(std::ceil(std::sqrt(budget.apexes))));
  int used = 0;
  for (int gy = 0; gy < grid && used < budget.apexes; ++gy) {
    for (int gx = 0; gx < grid && used < budget.apexes; ++gx, ++used) {
      const Point2 apex{
          center.x + (grid == 1 ? 0.0 : half_x * (2.0 * gx / (grid - 1) - 1.0)),
          center.y + (grid == 1 ? 0.0 : half_y * (2.0 * gy / (grid - 1) - 1.0))};
      for (int j = 0; j < budget.angles; ++j) {
        const double theta0 = kTwoPi * j / budget.angles;
        FanConstruction fan = basic_construction(mass, apex, theta0, q);
        std::vector<Wedge> pieces = p_wedges(fan, p);
        double worst = 0.0;
        for (const Wedge& w : pieces) worst = std::max(worst, w.sweep);
        ++result.search->attempts;
        if (worst < result.search->min_worst_sweep) {
          result.search->min_worst_sweep = worst;
          result.search->best_apex = apex;
          result.search->best_theta0 = theta0;
        }
        if (worst <= kPi + kConvexSweepSlack) {
          SpiralCover cover{{p, q}, apex, fan.ray_angles, std::move(pieces),
                            OrbitTag::Single};
          if (verify_spiral(mass, cover, tol).passed()) {
            result.outcome = ConstructOutcome::Cover;
            result.cover = std::move(cover);
            result.reason = "found by heuristic search";
            return result;
          }
        }
      }
    }
  }
  result.outcome = ConstructOutcome::Unknown;
  result.reason = "no convex spiral found within the search budget; minimal worst sweep " +
                  std::to_string(result.search->min_worst_sweep);
  return result;
}

/// Dispatches on the regime of (p, q): guaranteed constructions run
/// directly, infeasible pairs are rejected without any attempt, and the
/// bad-mass / open regimes fall back to heuristic search.
inline ConstructResult construct(const Mass& mass, int p, int q, SearchBudget budget = {},
                                 double tol = 1e-8) {
  ConstructResult result;
  result.regime = classify_regime(p, q);
  switch (result.regime) {
    case Regime::InfeasibleAllMasses:
      result.outcome = ConstructOutcome::Infeasible;
      result.reason =
          "q < 2p: two p-wedges spaced p apart have combined measure 2p/q > 1, so their "
          "angles add up to more than 2*pi and cannot both be convex";
      return result;
    case Regime::TrivialHalving:
      result.cover = construct_trivial_halving(mass, tol);
      break;
    case Regime::GuaranteedCenterpoint:
      result.cover = construct_centerpoint_spiral(mass, p, q, 720, tol);
      break;
    case Regime::Guaranteed3pMinus3:
      result.cover = construct_3p_minus_3(mass, p, tol);
      break;
    case Regime::Guaranteed3pMinus2:
      result.cover = construct_3p_minus_2(mass, p, tol);
      break;
    case Regime::Guaranteed3pMinus1:
      result.cover = construct_3p_minus_1(mass, p, tol);
      break;
    case Regime::ExistsBadMass:
    case Regime::OpenEvenCase:
      return heuristic_search(mass, p, q, budget, tol);
  }
  result.outcome = ConstructOutcome::Cover;
  result.reason = std::string("constructed via regime ") + to_string(result.regime);
  return result;
}

}  // namespace equicover
