#include <catch2/catch_amalgamated.hpp>

#include "equicover/classic_partitions.hpp"
#include "equicover/massgen.hpp"
#include "test_support.hpp"

using namespace equicover;
using testsupport::RigidMotion;
using testsupport::TestRng;

namespace {

double line_offset(const Line& line) {
  const Point2 u = dir(line.angle);
  return cross(u, line.point);  // signed distance of the line from the origin
}

double quadrant_measure(const Mass& mass, Point2 o, double from, double to) {
  return measure_wedge(mass, {o, from, to - from});
}

}  // namespace

TEST_CASE("quantile lines of the uniform square") {
  const Mass square = uniform_square();
  const Line h = quantile_line(square, 0.0, 0.5);
  REQUIRE(h.angle == Catch::Approx(0.0).margin(1e-12));
  REQUIRE(std::abs(line_offset(h)) < 1e-9);  // y = 0
  const Line v = quantile_line(square, kPi / 2, 0.5);
  REQUIRE(v.angle == Catch::Approx(kPi / 2).margin(1e-12));
  REQUIRE(std::abs(line_offset(v)) < 1e-9);  // x = 0
}

TEST_CASE("quantile line self-consistency on a random mass") {
  const Mass mass = random_mass(11, 5);
  const Line line = quantile_line(mass, 0.7, 0.25);
  REQUIRE(measure_halfplane(mass, {{line.point, 0.7}, Side::Left}) ==
          Catch::Approx(0.25).margin(1e-9));
}

TEST_CASE("halving line is independent of approach direction") {
  for (int seed : {3, 8}) {
    const Mass mass = random_mass(seed, 5);
    const Line l1 = quantile_line(mass, 0.4, 0.5);
    const Line l2 = quantile_line(mass, 0.4 + kPi, 0.5);
    REQUIRE(l1.angle == Catch::Approx(l2.angle).margin(1e-12));
    REQUIRE(std::abs(line_offset(l1) - line_offset(l2)) < 1e-9);
  }
}

TEST_CASE("depth estimates") {
  const Mass square = uniform_square();
  REQUIRE(depth(square, {0.0, 0.0}, 360).min_halfplane_measure ==
          Catch::Approx(0.5).margin(0.01));
  REQUIRE(depth(square, {10.0, 10.0}, 64).min_halfplane_measure ==
          Catch::Approx(0.0).margin(1e-12));

  const Mass tight = tight_mass(0.01);
  const Point2 centroid{0.5, std::sqrt(3.0) / 6};
  REQUIRE(depth(tight, centroid, 720).min_halfplane_measure ==
          Catch::Approx(1.0 / 3).margin(0.01));
  // each cluster center also has depth about 1/3
  REQUIRE(depth(tight, {0.0, 0.0}, 720).min_halfplane_measure <= 1.0 / 3 + 0.02);
  REQUIRE(depth(square, {0.3, -0.4}, 101).min_halfplane_measure <= 0.5 + 1e-12);
}

TEST_CASE("centerpoint of the square is the center") {
  const Point2 c = centerpoint(uniform_square(), 360);
  REQUIRE(norm(c) < 1e-6);
}

TEST_CASE("centerpoint is translation equivariant") {
  Mass shifted = uniform_square();
  shifted.parts[0].vertices = {{4.0, 6.0}, {6.0, 6.0}, {6.0, 8.0}, {4.0, 8.0}};
  const Point2 c = centerpoint(shifted, 360);
  REQUIRE(std::abs(c.x - 5.0) < 1e-6);
  REQUIRE(std::abs(c.y - 7.0) < 1e-6);
}

TEST_CASE("centerpoint depth bound holds across the mass set") {
  std::vector<Mass> masses{uniform_square(), random_mass(2, 5), random_mass(6, 5),
                           tight_mass(0.01)};
  for (const Mass& mass : masses) {
    const int M = 360;
    const Point2 c = centerpoint(mass, M);
    REQUIRE(depth(mass, c, M).min_halfplane_measure >= 1.0 / 3 - 2.0 / M);
  }
}

TEST_CASE("six-partition with equal targets on the square concurs at the center") {
  const Mass square = uniform_square();
  const SixPartition six = buck_buck(square, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1e-9);
  REQUIRE(norm(six.apex) < 1e-6);
  for (int j = 0; j < 6; ++j) {
    REQUIRE(six_region_measure(square, six, j) == Catch::Approx(1.0 / 6).margin(1e-9));
  }
}

TEST_CASE("six-partition rays form three concurrent lines") {
  const Mass mass = random_mass(17, 5);
  const SixPartition six = buck_buck(mass, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1e-9);
  for (int j = 0; j < 3; ++j) {
    REQUIRE(six.rays[j + 3] - six.rays[j] == Catch::Approx(kPi).margin(1e-12));
  }
  for (int j = 0; j + 1 < 6; ++j) REQUIRE(six.rays[j] <= six.rays[j + 1] + 1e-12);
  // opposite regions agree
  for (int j = 0; j < 3; ++j) {
    REQUIRE(six_region_measure(mass, six, j) ==
            Catch::Approx(six_region_measure(mass, six, j + 3)).margin(2e-9));
  }
}

TEST_CASE("six-partition accepts degenerate targets") {
  const Mass square = uniform_square();
  const SixPartition six = buck_buck(square, 0.5, 0.0, 0.0, 1e-9);
  REQUIRE(six_region_measure(square, six, 0) == Catch::Approx(0.5).margin(1e-9));
  REQUIRE(six_region_measure(square, six, 1) <= 1e-9);
  REQUIRE(six_region_measure(square, six, 2) <= 1e-9);
  REQUIRE(six_region_measure(square, six, 3) == Catch::Approx(0.5).margin(1e-9));

  const SixPartition mixed = buck_buck(square, 0.2, 0.0, 0.3, 1e-9);
  const double expected[6] = {0.2, 0.0, 0.3, 0.2, 0.0, 0.3};
  for (int j = 0; j < 6; ++j) {
    REQUIRE(six_region_measure(square, mixed, j) ==
            Catch::Approx(expected[j]).margin(1e-9));
  }
}

TEST_CASE("six-partition hits the doubled-construction targets") {
  // a = r/(6r+4), b = c = (r+1)/(6r+4) with r = 2
  const Mass square = uniform_square();
  const SixPartition six = buck_buck(square, 2.0 / 16, 3.0 / 16, 3.0 / 16, 1e-9);
  const double expected[6] = {2.0 / 16, 3.0 / 16, 3.0 / 16, 2.0 / 16, 3.0 / 16, 3.0 / 16};
  for (int j = 0; j < 6; ++j) {
    REQUIRE(six_region_measure(square, six, j) ==
            Catch::Approx(expected[j]).margin(1e-9));
  }
}

TEST_CASE("six-partition on random masses") {
  for (int seed : {1, 9}) {
    const Mass mass = random_mass(seed, 5);
    const SixPartition six = buck_buck(mass, 2.0 / 14, 2.0 / 14, 3.0 / 14, 1e-9);
    const double expected[6] = {2.0 / 14, 2.0 / 14, 3.0 / 14,
                                2.0 / 14, 2.0 / 14, 3.0 / 14};
    for (int j = 0; j < 6; ++j) {
      REQUIRE(six_region_measure(mass, six, j) ==
              Catch::Approx(expected[j]).margin(1e-9));
    }
  }
}

TEST_CASE("buck_buck validates targets") {
  const Mass square = uniform_square();
  REQUIRE_THROWS_AS(buck_buck(square, 0.3, 0.3, 0.3), std::invalid_argument);
  REQUIRE_THROWS_AS(buck_buck(square, -0.1, 0.3, 0.3), std::invalid_argument);
}

TEST_CASE("partition primitives are equivariant under rigid motions") {
  // the rotation angle is a multiple of the direction-grid spacing, since
  // sampled estimators are exactly equivariant only for grid rotations
  const RigidMotion motion{kPi / 4, {2.5, -1.25}};
  const Mass mass = random_mass(23, 4);
  const Mass moved = motion.apply(mass);

  const Point2 c = centerpoint(mass, 360);
  const Point2 c_moved = centerpoint(moved, 360);
  REQUIRE(norm(c_moved - motion.apply(c)) < 1e-6);

  const double d0 = depth(mass, c, 240).min_halfplane_measure;
  const double d1 = depth(moved, motion.apply(c), 240).min_halfplane_measure;
  REQUIRE(d0 == Catch::Approx(d1).margin(1e-6));

  const Line h = quantile_line(mass, 0.31, 0.5);
  const Line h_moved = quantile_line(moved, 0.31 + motion.angle, 0.5);
  const Point2 mapped = motion.apply(h.point);
  const Point2 u = dir(h_moved.angle);
  REQUIRE(std::abs(cross(u, mapped - h_moved.point)) < 1e-6);
}

TEST_CASE("cross-quantile line on the square with symmetric targets") {
  const Mass square = uniform_square();
  const Line l = cross_quantile_line(square, {{0.0, 0.0}, 0.0}, 0.5, 0.25, 1e-9);
  REQUIRE(l.angle == Catch::Approx(kPi / 2).margin(1e-7));
  REQUIRE(std::abs(line_offset(l)) < 1e-7);  // x = 0
}

TEST_CASE("cross-quantile line reproduces the left-family quadrants") {
  const Mass square = uniform_square();
  const Line hline{{0.0, 0.0}, 0.0};
  const Line l = cross_quantile_line(square, hline, 5.0 / 8, 3.0 / 8, 1e-9);
  const Point2 o = line_intersection(hline, l);
  const double sigma = l.angle;
  REQUIRE(quadrant_measure(square, o, 0.0, sigma) == Catch::Approx(3.0 / 8).margin(1e-8));
  REQUIRE(quadrant_measure(square, o, sigma, kPi) == Catch::Approx(1.0 / 8).margin(1e-8));
  REQUIRE(quadrant_measure(square, o, sigma + kPi, kTwoPi) ==
          Catch::Approx(2.0 / 8).margin(1e-8));
  REQUIRE(quadrant_measure(square, o, kPi, sigma + kPi) ==
          Catch::Approx(2.0 / 8).margin(1e-8));
}

TEST_CASE("cross-quantile line reproduces the right-family quadrants on a random mass") {
  const Mass mass = random_mass(31, 5);
  const Line hline = quantile_line(mass, 0.0, 0.5);
  const Line l = cross_quantile_line(mass, hline, 3.0 / 8, 2.0 / 8, 1e-9);
  const Point2 o = line_intersection(hline, l);
  const double sigma = l.angle;
  REQUIRE(quadrant_measure(mass, o, 0.0, sigma) == Catch::Approx(2.0 / 8).margin(1e-8));
  REQUIRE(quadrant_measure(mass, o, sigma, kPi) == Catch::Approx(2.0 / 8).margin(1e-8));
  REQUIRE(quadrant_measure(mass, o, sigma + kPi, kTwoPi) ==
          Catch::Approx(1.0 / 8).margin(1e-8));
  REQUIRE(quadrant_measure(mass, o, kPi, sigma + kPi) ==
          Catch::Approx(3.0 / 8).margin(1e-8));
}

TEST_CASE("cross-quantile line validates inputs") {
  const Mass square = uniform_square();
  REQUIRE_THROWS_AS(cross_quantile_line(square, {{0.0, 0.0}, 0.0}, 0.25, 0.5),
                    std::invalid_argument);
  // hline that does not halve the mass
  REQUIRE_THROWS_AS(cross_quantile_line(square, {{0.0, 0.7}, 0.0}, 0.5, 0.25),
                    std::invalid_argument);
}
