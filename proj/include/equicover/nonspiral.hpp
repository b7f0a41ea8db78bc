#pragma once

#include "equicover/classic_partitions.hpp"
#include "equicover/covers.hpp"
#include "equicover/verify.hpp"

namespace equicover {

/// Non-spiral (8,3)-equicovering: two four-piece spiral families wound one
/// and a half turns around distinct centers on a common halving line.
struct NonSpiral83 {
  GeneralCover cover;  // pieces[0..3] around center_left, pieces[4..7] around center_right
  Line hline;
  double hline_direction = 0.0;
  Point2 center_left, center_right;
  std::vector<double> winding_left, winding_right;  // 13 ray angles each
};

namespace detail {

struct SideFrame {
  Point2 center;
  double sigma = 0.0;  // directed angle of the cross line
};

/// Center for one side: crossing of the halving line with the line whose
/// right side carries t_right and whose top-right quadrant carries
/// t_top_right.
inline SideFrame side_center(const Mass& mass, double theta_h, double s_half, double t_right,
                             double t_top_right, double tol) {
  const DirectedCrossLine cl =
      cross_quantile_directed(mass, theta_h, s_half, t_right, t_top_right, tol);
  const Point2 u_h = dir(theta_h);
  const Point2 m_h{-u_h.y, u_h.x};
  const Point2 m_l{-std::sin(cl.sigma), std::cos(cl.sigma)};
  const double den = cross(m_h, m_l);
  if (std::abs(den) < 1e-14) {
    throw std::runtime_error("construct_83: cross line degenerated to the halving line");
  }
  // solve dot(m_h, x) = s_half, dot(m_l, x) = cl.offset
  return {{(s_half * m_l.y - cl.offset * m_h.y) / den,
           (cl.offset * m_h.x - s_half * m_l.x) / den},
          cl.sigma};
}

/// One winding family: 12 wedges of measure 1/8 through one and a half
/// turns. The rays at cumulative 3/8, 4/8, 6/8 and a full turn are pinned
/// to the cross line and the halving line; interior rays are placed by
/// measure. Pinning keeps every 3-block inside a half-plane even when the
/// mass has zero-density angular gaps.
inline std::vector<double> family_winding(const Mass& mass, Point2 center, double phi0,
                                          double psi) {
  std::vector<double> rays(13);
  rays[0] = phi0;
  rays[1] = ray_at_measure(mass, center, rays[0], 1.0 / 8);
  rays[2] = ray_at_measure(mass, center, rays[1], 1.0 / 8);
  rays[3] = psi;
  rays[4] = phi0 + kPi;
  rays[5] = ray_at_measure(mass, center, rays[4], 1.0 / 8);
  rays[6] = psi + kPi;
  rays[7] = ray_at_measure(mass, center, rays[6], 1.0 / 8);
  rays[8] = phi0 + kTwoPi;
  for (int i = 9; i < 13; ++i) rays[i] = rays[i - 8] + kTwoPi;
  return rays;
}

inline NonSpiral83 construct_83_at(const Mass& mass, double theta_h, double tol,
                                   long n_samples, std::uint64_t seed) {
  const Point2 u_h = dir(theta_h);
  const Point2 m_h{-u_h.y, u_h.x};
  const double s_half = quantile_offset(mass, m_h, 0.5);
  const double cross_tol = std::min(tol, 1e-10);

  // Left family: quadrants (3/8, 1/8, 2/8, 2/8) around its center.
  const SideFrame left = side_center(mass, theta_h, s_half, 5.0 / 8, 3.0 / 8, cross_tol);
  // Right family: quadrants (2/8, 2/8, 1/8, 3/8).
  const SideFrame right = side_center(mass, theta_h, s_half, 3.0 / 8, 2.0 / 8, cross_tol);
  const Point2 o_left = left.center;
  const Point2 o_right = right.center;

  const double separation = dot(o_right - o_left, u_h);
  if (std::abs(separation) <= 1e-9 && norm(o_right - o_left) <= 1e-9) {
    throw std::runtime_error("degenerate: centers coincide");
  }
  if (separation <= 1e-9) {
    throw std::runtime_error("construct_83: centers out of order along the halving line");
  }

  NonSpiral83 result;
  result.hline = make_line(s_half * m_h, theta_h);
  result.hline_direction = theta_h;
  result.center_left = o_left;
  result.center_right = o_right;
  // Each family winds one and a half turns: 12 wedges of measure 1/8,
  // grouped into four disjoint 3-wedges. The left family starts along the
  // halving line pointing in the sweep direction, the right family
  // opposite, so one covers the upper half twice and the lower once, and
  // the other the reverse. The first quadrant swept carries 3/8 on both
  // sides (upper-right of the left cross line, lower-left of the right).
  result.winding_left = family_winding(mass, o_left, theta_h, left.sigma);
  result.winding_right = family_winding(mass, o_right, theta_h + kPi, right.sigma + kPi);

  GeneralCover cover;
  cover.target_multiplicity = 3;
  cover.target = {3, 8};
  for (int i = 0; i < 4; ++i) {
    const double s0 = result.winding_left[3 * i];
    cover.pieces.push_back({o_left, s0, result.winding_left[3 * i + 3] - s0});
  }
  for (int i = 0; i < 4; ++i) {
    const double s0 = result.winding_right[3 * i];
    cover.pieces.push_back({o_right, s0, result.winding_right[3 * i + 3] - s0});
  }
  const VerifyReport report = verify_general(mass, cover, 1e-8, n_samples, seed);
  if (!report.passed()) {
    throw std::runtime_error("construct_83: verification failed (" +
                             report.failures.front().detail + ")");
  }
  result.cover = std::move(cover);
  return result;
}

}  // namespace detail

/// Builds the non-spiral (8,3)-equicovering. The halving-line direction is
/// a free parameter; on a degenerate configuration the direction is
/// perturbed once before giving up.
inline NonSpiral83 construct_83(const Mass& mass, double hline_angle = 0.0,
                                double tol = kDefaultMeasureTol, long n_samples = 4096,
                                std::uint64_t seed = 20240901ULL) {
  try {
    return detail::construct_83_at(mass, hline_angle, tol, n_samples, seed);
  } catch (const std::runtime_error& e) {
    if (std::string(e.what()).find("degenerate") == std::string::npos) throw;
    return detail::construct_83_at(mass, hline_angle + 0.1, tol, n_samples, seed);
  }
}

}  // namespace equicover
