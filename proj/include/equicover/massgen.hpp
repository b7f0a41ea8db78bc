#pragma once

#include <cstdint>

#include "equicover/mass_model.hpp"
#include "equicover/verify.hpp"

namespace equicover {

/// Uniform mass on the square [-1, 1]^2.
inline Mass uniform_square() {
  Mass mass;
  mass.parts.push_back({{{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}}, 1.0});
  return mass;
}

namespace detail {

inline std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  const std::size_t n = pts.size();
  std::vector<Point2> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {  // upper
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k > 1 ? k - 1 : k);
  return hull;
}

}  // namespace detail

/// Seed-deterministic mass of k random convex polygons (hulls of random
/// points in disks) with random weights normalized to 1.
inline Mass random_mass(std::uint64_t seed, int k) {
  if (k < 1) throw std::invalid_argument("random_mass: k must be >= 1");
  std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 0x2545F4914F6CDD1DULL;
  const auto u01 = [&] { return detail::uniform01(state); };

  Mass mass;
  std::vector<double> weights;
  for (int i = 0; i < k; ++i) {
    std::vector<Point2> hull;
    for (int attempt = 0; attempt < 100; ++attempt) {
      const Point2 center{3.0 * u01() - 1.5, 3.0 * u01() - 1.5};
      const double radius = 0.3 + 0.7 * u01();
      const int npts = 6 + static_cast<int>(detail::splitmix64(state) % 7);
      std::vector<Point2> pts;
      pts.reserve(npts);
      for (int j = 0; j < npts; ++j) {
        const double angle = kTwoPi * u01();
        const double rad = radius * std::sqrt(u01());
        pts.push_back(center + rad * dir(angle));
      }
      hull = detail::convex_hull(std::move(pts));
      if (hull.size() >= 3 && polygon_area(hull) > 1e-3) break;
      hull.clear();
    }
    if (hull.empty()) throw std::runtime_error("random_mass: failed to generate a polygon");
    mass.parts.push_back({std::move(hull), 0.0});
    weights.push_back(0.2 + u01());
  }
  double total = 0.0;
  for (double w : weights) total += w;
  double assigned = 0.0;
  for (int i = 0; i < k; ++i) {
    mass.parts[i].weight = i + 1 < k ? weights[i] / total : 1.0 - assigned;
    assigned += mass.parts[i].weight;
  }
  validate(mass);
  return mass;
}

/// Mass whose best centerpoint has depth close to 1/3: three squares of
/// side 2*epsilon at the vertices of a unit equilateral triangle, each of
/// weight 1/3.
inline Mass tight_mass(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.1)) {
    throw std::invalid_argument("tight_mass: epsilon must be in (0, 0.1)");
  }
  const Point2 centers[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2}};
  Mass mass;
  double assigned = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Point2 c = centers[i];
    const double e = epsilon;
    const double w = i < 2 ? 1.0 / 3 : 1.0 - assigned;
    assigned += w;
    mass.parts.push_back({{{c.x - e, c.y - e}, {c.x + e, c.y - e}, {c.x + e, c.y + e},
                           {c.x - e, c.y + e}},
                          w});
  }
  return mass;
}

}  // namespace equicover
