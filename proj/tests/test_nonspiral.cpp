#include <catch2/catch_amalgamated.hpp>

#include "equicover/massgen.hpp"
#include "equicover/nonspiral.hpp"

using namespace equicover;

namespace {

// multiplicity of a point among a subset of pieces, skipping points near
// any boundary line of the full cover
int coverage_count(const std::vector<Wedge>& pieces, Point2 pt) {
  int count = 0;
  for (const Wedge& w : pieces) {
    if (wedge_contains(w, pt)) ++count;
  }
  return count;
}

bool near_any_boundary(const NonSpiral83& result, Point2 pt) {
  for (const Wedge& w : result.cover.pieces) {
    for (const double angle : {w.start, w.start + w.sweep}) {
      if (std::abs(cross(dir(angle), pt - w.apex)) <= 1e-6) return true;
    }
  }
  const Point2 u = dir(result.hline_direction);
  return std::abs(cross(u, pt - result.hline.point)) <= 1e-6;
}

}  // namespace

TEST_CASE("non-spiral (8,3) cover on the uniform square") {
  const Mass square = uniform_square();
  const NonSpiral83 result = construct_83(square);
  REQUIRE(result.cover.pieces.size() == 8);
  REQUIRE(result.cover.target_multiplicity == 3);
  for (const Wedge& w : result.cover.pieces) {
    REQUIRE(measure_wedge(square, w) == Catch::Approx(3.0 / 8).margin(1e-8));
    REQUIRE(w.sweep <= kPi + 1e-9);
  }
  // centers are distinct and ordered along the halving line; the cover
  // has exactly two apexes, so it cannot be a spiral
  REQUIRE(dot(result.center_right - result.center_left, dir(result.hline_direction)) > 1e-9);
  std::vector<Point2> apexes;
  for (const Wedge& w : result.cover.pieces) {
    bool known = false;
    for (const Point2& a : apexes) known |= norm(a - w.apex) < 1e-12;
    if (!known) apexes.push_back(w.apex);
  }
  REQUIRE(apexes.size() == 2);

  // the second left piece is exactly the closed half-plane left of l_L
  REQUIRE(result.cover.pieces[1].sweep == Catch::Approx(kPi).margin(1e-9));

  const VerifyReport report = verify_general(square, result.cover, 1e-8, 10000, 99);
  REQUIRE(report.passed());
  REQUIRE(report.multiplicity_method == MultiplicityMethod::Sampled);
}

TEST_CASE("each winding family covers its half-planes the stated number of times") {
  const Mass mass = random_mass(21, 5);
  const NonSpiral83 result = construct_83(mass);
  const std::vector<Wedge> left(result.cover.pieces.begin(), result.cover.pieces.begin() + 4);
  const std::vector<Wedge> right(result.cover.pieces.begin() + 4, result.cover.pieces.end());

  const Point2 u = dir(result.hline_direction);
  const MassSampler sampler(mass);
  int checked = 0;
  for (int i = 0; i < 4000 && checked < 2000; ++i) {
    const Point2 pt = sampler.sample(42, i);
    if (near_any_boundary(result, pt)) continue;
    ++checked;
    const bool above = cross(u, pt - result.hline.point) > 0.0;
    REQUIRE(coverage_count(left, pt) == (above ? 2 : 1));
    REQUIRE(coverage_count(right, pt) == (above ? 1 : 2));
  }
  REQUIRE(checked >= 2000);
}

TEST_CASE("non-spiral construction works for other halving directions") {
  const Mass mass = random_mass(33, 5);
  const NonSpiral83 result = construct_83(mass, 0.4);
  REQUIRE(verify_general(mass, result.cover, 1e-8, 8000, 7).passed());
  REQUIRE(dot(result.center_right - result.center_left, dir(0.4)) > 1e-9);
}

TEST_CASE("winding families wind one and a half turns") {
  const Mass square = uniform_square();
  const NonSpiral83 result = construct_83(square);
  REQUIRE(result.winding_left.size() == 13);
  REQUIRE(result.winding_left.back() - result.winding_left.front() ==
          Catch::Approx(3 * kPi).margin(1e-8));
  REQUIRE(result.winding_right.back() - result.winding_right.front() ==
          Catch::Approx(3 * kPi).margin(1e-8));
}
