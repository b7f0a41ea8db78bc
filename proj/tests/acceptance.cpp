// Acceptance suite: runs every acceptance criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "equicover/equicover.hpp"

using namespace equicover;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::pair<std::string, Mass>> acceptance_masses() {
  std::vector<std::pair<std::string, Mass>> masses;
  masses.push_back({"uniform_square", uniform_square()});
  for (int seed = 1; seed <= 10; ++seed) {
    masses.push_back({"random_mass(" + std::to_string(seed) + ")", random_mass(seed, 5)});
  }
  masses.push_back({"tight_mass(0.01)", tight_mass(0.01)});
  return masses;
}

// Independent transcription of the feasibility classification, clause by
// clause, with the open gap and the (1,2) case made explicit.
Regime feasibility_table(int p, int q) {
  if (q < 2 * p) return Regime::InfeasibleAllMasses;           // part 1
  if (q < 3 * p - 3) return Regime::ExistsBadMass;             // part 2
  if (q == 3 * p - 3) {                                        // part 3 / open gap
    return p % 2 == 1 ? Regime::Guaranteed3pMinus3 : Regime::OpenEvenCase;
  }
  if (q > 3 * p - 3 && q < 3 * p && p >= 2) {                  // part 4
    return q == 3 * p - 2 ? Regime::Guaranteed3pMinus2 : Regime::Guaranteed3pMinus1;
  }
  if (q >= 3 * p) return Regime::GuaranteedCenterpoint;        // part 5
  return Regime::TrivialHalving;                               // (p, q) = (1, 2)
}

bool criterion_regime_table(std::string& detail) {
  const auto t0 = Clock::now();
  for (int q = 2; q <= 40; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (classify_regime(p, q) != feasibility_table(p, q)) {
        detail = "mismatch at (" + std::to_string(p) + ", " + std::to_string(q) + ")";
        return false;
      }
    }
  }
  detail = "all reduced pairs with q <= 40 agree (" +
           std::to_string(seconds_since(t0)) + " s)";
  return seconds_since(t0) < 1.0;
}

bool criterion_guaranteed_constructions(std::string& detail) {
  const auto masses = acceptance_masses();
  const std::pair<int, int> pairs[] = {{1, 2}, {1, 3}, {2, 7}, {3, 10}, {1, 5}, {5, 12},
                                       {7, 18}, {2, 5}, {4, 11}, {3, 7}, {5, 13}};
  double slowest = 0.0;
  for (const auto& [name, mass] : masses) {
    for (const auto& [p, q] : pairs) {
      const auto t0 = Clock::now();
      ConstructResult result;
      try {
        result = construct(mass, p, q);
      } catch (const std::exception& e) {
        detail = name + " (" + std::to_string(p) + "," + std::to_string(q) + "): " + e.what();
        return false;
      }
      const double elapsed = seconds_since(t0);
      slowest = std::max(slowest, elapsed);
      if (result.outcome != ConstructOutcome::Cover) {
        detail = name + " (" + std::to_string(p) + "," + std::to_string(q) + "): no cover";
        return false;
      }
      const VerifyReport report = verify_spiral(mass, *result.cover, 1e-8);
      if (!report.passed() || !report.multiplicity_ok ||
          report.max_sweep > kPi + 1e-9) {
        detail = name + " (" + std::to_string(p) + "," + std::to_string(q) +
                 "): verification failed";
        return false;
      }
      if (elapsed >= 10.0) {
        detail = name + " (" + std::to_string(p) + "," + std::to_string(q) + ") took " +
                 std::to_string(elapsed) + " s";
        return false;
      }
    }
  }
  detail = "132 cases verified, slowest " + std::to_string(slowest) + " s";
  return true;
}

bool criterion_six_partitions(std::string& detail) {
  const auto masses = acceptance_masses();
  std::vector<std::array<double, 3>> triples;
  triples.push_back({1.0 / 6, 1.0 / 6, 1.0 / 6});  // q = 3p - 3
  for (int r = 1; r <= 3; ++r) {                   // q = 3p - 1
    triples.push_back({r / (6.0 * r + 4), (r + 1) / (6.0 * r + 4), (r + 1) / (6.0 * r + 4)});
  }
  for (int r = 1; r <= 3; ++r) {                   // q = 3p - 2
    triples.push_back(
        {2.0 * r / (12 * r + 2), 2.0 * r / (12 * r + 2), (2.0 * r + 1) / (12 * r + 2)});
  }
  double worst_residual = 0.0, worst_opposite = 0.0;
  for (const auto& [name, mass] : masses) {
    for (const auto& t : triples) {
      SixPartition six;
      try {
        six = buck_buck(mass, t[0], t[1], t[2], 1e-9);
      } catch (const std::exception& e) {
        detail = name + ": " + e.what();
        return false;
      }
      double measures[6];
      for (int j = 0; j < 6; ++j) measures[j] = six_region_measure(mass, six, j);
      for (int j = 0; j < 6; ++j) {
        worst_residual = std::max(worst_residual, std::abs(measures[j] - t[j % 3]));
      }
      for (int j = 0; j < 3; ++j) {
        worst_opposite = std::max(worst_opposite, std::abs(measures[j] - measures[j + 3]));
      }
    }
  }
  detail = "worst residual " + std::to_string(worst_residual) + ", worst opposite gap " +
           std::to_string(worst_opposite);
  return worst_residual <= 1e-8 && worst_opposite <= 2e-8;
}

// arc intersection length of two wedge angle intervals on the circle
double arc_overlap(const Wedge& a, const Wedge& b) {
  const double a0 = wrap_two_pi(a.start);
  const double b0 = wrap_two_pi(b.start);
  double overlap = 0.0;
  for (const double shift : {-kTwoPi, 0.0, kTwoPi}) {
    const double lo = std::max(a0, b0 + shift);
    const double hi = std::min(a0 + a.sweep, b0 + shift + b.sweep);
    overlap = std::max(overlap, hi - lo);
  }
  return overlap;
}

bool criterion_orbit_selection(std::string& detail) {
  int rejected_reflex = 0;
  for (const auto& [name, mass] : acceptance_masses()) {
    OrbitDiagnostics diag;
    SpiralCover cover;
    try {
      cover = construct_3p_minus_2(mass, 3, 1e-8, &diag);
    } catch (const std::exception& e) {
      detail = name + ": " + e.what();
      return false;
    }
    const double chosen = cover.orbit == OrbitTag::OrbitOdd ? diag.odd_sweep : diag.even_sweep;
    const double rejected = cover.orbit == OrbitTag::OrbitOdd ? diag.even_sweep : diag.odd_sweep;
    if (chosen > kPi + 1e-9) {
      detail = name + ": chosen critical wedge has sweep " + std::to_string(chosen);
      return false;
    }
    if (rejected > kPi) {
      ++rejected_reflex;
      if (arc_overlap(diag.critical_odd, diag.critical_even) > 1e-9) {
        detail = name + ": critical wedges overlap in winding";
        return false;
      }
    }
  }
  detail = "critical wedge convex on all masses; " + std::to_string(rejected_reflex) +
           " rejected orbits were reflex and disjoint from the chosen one";
  return true;
}

bool criterion_nonspiral(std::string& detail) {
  for (const auto& [name, mass] : acceptance_masses()) {
    NonSpiral83 result;
    try {
      result = construct_83(mass);
    } catch (const std::exception& e) {
      detail = name + ": " + e.what();
      return false;
    }
    if (result.cover.pieces.size() != 8) {
      detail = name + ": wrong piece count";
      return false;
    }
    for (const Wedge& w : result.cover.pieces) {
      if (std::abs(measure_wedge(mass, w) - 3.0 / 8) > 1e-8 || w.sweep > kPi + 1e-9) {
        detail = name + ": piece measure or sweep out of tolerance";
        return false;
      }
    }
    // sampled multiplicity 3 on at least 10^4 retained samples
    const VerifyReport report = verify_general(mass, result.cover, 1e-8, 10560, 2024);
    if (!report.passed() || report.samples_tested < 10000) {
      detail = name + ": sampled multiplicity check failed (" +
               std::to_string(report.samples_tested) + " retained)";
      return false;
    }
    const Point2 u = dir(result.hline_direction);
    if (dot(result.center_right - result.center_left, u) <= 1e-9) {
      detail = name + ": centers not ordered along the halving line";
      return false;
    }
    // each family alone covers its half-planes (2, 1) and (1, 2)
    const std::vector<Wedge> left(result.cover.pieces.begin(),
                                  result.cover.pieces.begin() + 4);
    const std::vector<Wedge> right(result.cover.pieces.begin() + 4,
                                   result.cover.pieces.end());
    const MassSampler sampler(mass);
    for (int i = 0; i < 4000; ++i) {
      const Point2 pt = sampler.sample(31337, i);
      const double side = cross(u, pt - result.hline.point);
      if (std::abs(side) <= 1e-6) continue;
      bool near = false;
      for (const Wedge& w : result.cover.pieces) {
        for (const double angle : {w.start, w.start + w.sweep}) {
          near |= std::abs(cross(dir(angle), pt - w.apex)) <= 1e-6;
        }
      }
      if (near) continue;
      int in_left = 0, in_right = 0;
      for (const Wedge& w : left) in_left += wedge_contains(w, pt);
      for (const Wedge& w : right) in_right += wedge_contains(w, pt);
      const bool above = side > 0.0;
      if (in_left != (above ? 2 : 1) || in_right != (above ? 1 : 2)) {
        detail = name + ": family coverage mismatch";
        return false;
      }
    }
  }
  detail = "12 masses: measures, convexity, multiplicity, ordering and family coverage hold";
  return true;
}

bool criterion_negative_regimes(std::string& detail) {
  for (const auto& [p, q] : {std::pair{2, 3}, {3, 5}}) {
    const ConstructResult result = construct(uniform_square(), p, q);
    if (result.outcome != ConstructOutcome::Infeasible || result.search.has_value()) {
      detail = "(" + std::to_string(p) + "," + std::to_string(q) +
               ") was not rejected outright";
      return false;
    }
  }
  const ConstructResult search = heuristic_search(tight_mass(0.01), 5, 11, {50, 64});
  if (search.outcome != ConstructOutcome::Unknown) {
    detail = "(5,11) heuristic unexpectedly returned a cover";
    return false;
  }
  if (search.search->attempts != 50L * 64L ||
      search.search->min_worst_sweep <= kPi) {
    detail = "(5,11) attempts " + std::to_string(search.search->attempts) +
             ", min worst sweep " + std::to_string(search.search->min_worst_sweep);
    return false;
  }
  detail = "(2,3), (3,5) infeasible; (5,11) on the tight mass: every one of 3200 attempts "
           "had a wedge wider than pi (empirical, not a nonexistence proof)";
  return true;
}

bool criterion_oracle_agreement(std::string& detail) {
  int agree = 0;
  const int total = 100;
  std::uint64_t state = 0xACCE97ULL;
  const auto next = [&] { return equicover::detail::uniform01(state); };
  for (int i = 0; i < total; ++i) {
    const Mass mass = random_mass(1000 + i, 4);
    double exact = 0.0;
    MonteCarloEstimate mc;
    if (i % 2 == 0) {
      const Wedge w{{3.0 * next() - 1.5, 3.0 * next() - 1.5}, kTwoPi * next(),
                    0.05 + (kTwoPi - 0.05) * next()};
      exact = measure_wedge(mass, w);
      mc = monte_carlo_measure(mass, w, 1000000, 555 + i);
    } else {
      const HalfPlane h{{{3.0 * next() - 1.5, 3.0 * next() - 1.5}, kPi * next()},
                        next() < 0.5 ? Side::Left : Side::Right};
      exact = measure_halfplane(mass, h);
      mc = monte_carlo_measure(mass, h, 1000000, 555 + i);
    }
    if (std::abs(exact - mc.estimate) <= 3.0 * mc.stderr_ + 1e-9) ++agree;
  }
  detail = std::to_string(agree) + "/100 pairs within three standard errors";
  return agree >= 97;
}

bool criterion_open_case(std::string& detail) {
  if (classify_regime(4, 9) != Regime::OpenEvenCase) {
    detail = "(4,9) regime mislabeled";
    return false;
  }
  const ConstructResult result = construct(uniform_square(), 4, 9);
  if (result.regime != Regime::OpenEvenCase) {
    detail = "construct reported the wrong regime";
    return false;
  }
  if (result.outcome == ConstructOutcome::Cover) {
    if (!verify_spiral(uniform_square(), *result.cover, 1e-8).passed()) {
      detail = "claimed cover failed verification";
      return false;
    }
    detail = "(4,9) heuristic found a verified cover on the square (noteworthy)";
    return true;
  }
  if (result.outcome != ConstructOutcome::Unknown) {
    detail = "(4,9) must resolve to Unknown or Cover";
    return false;
  }
  detail = "(4,9) reported Unknown with best worst-sweep " +
           std::to_string(result.search->min_worst_sweep);
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"regime table matches the independent transcription for q <= 40", criterion_regime_table},
      {"guaranteed constructions verify on the mass set", criterion_guaranteed_constructions},
      {"six-partition residuals within 1e-8", criterion_six_partitions},
      {"(3,7) orbit selection picks a convex critical wedge", criterion_orbit_selection},
      {"non-spiral (8,3) cover on the mass set", criterion_nonspiral},
      {"negative regimes rejected / demonstrated", criterion_negative_regimes},
      {"exact measures agree with the sampling oracle", criterion_oracle_agreement},
      {"open case (4,9) handled honestly", criterion_open_case},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %zu. %s — %s (%.1f s)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed > 0) {
    std::printf("%d criterion(s) failed\n", failed);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
