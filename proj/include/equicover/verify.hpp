#pragma once

#include <cstdint>

#include "equicover/covers.hpp"

namespace equicover {

inline constexpr double kConvexSweepSlack = 1e-9;     // sweep <= pi + slack counts as convex
inline constexpr double kBoundaryBand = 1e-6;         // sample discard distance from piece lines

struct Finding {
  std::string kind;   // "measure" | "sweep" | "multiplicity" | ...
  int index = -1;     // piece or arc index, -1 when not applicable
  double value = 0.0;
  std::string detail;
};

enum class MultiplicityMethod { ExactArc, Sampled };

inline const char* to_string(MultiplicityMethod m) {
  return m == MultiplicityMethod::ExactArc ? "exact-arc" : "sampled";
}

struct VerifyReport {
  std::vector<double> per_piece_measure_error;  // signed, measured - target
  double max_sweep = 0.0;
  bool multiplicity_ok = false;
  MultiplicityMethod multiplicity_method = MultiplicityMethod::ExactArc;
  long samples_tested = 0;
  long samples_discarded = 0;
  std::vector<Finding> failures;
  std::vector<std::string> warnings;

  bool passed() const { return failures.empty(); }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double uniform01(std::uint64_t& state) {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Draws points distributed according to a mass via area-weighted fan
/// triangulation. Sample i of a given seed is a pure function of
/// (seed, i), so results do not depend on evaluation order.
class MassSampler {
 public:
  explicit MassSampler(const Mass& mass) {
    double acc = 0.0;
    for (const WeightedPolygon& part : mass.parts) {
      const double part_area = polygon_area(part.vertices);
      for (std::size_t i = 1; i + 1 < part.vertices.size(); ++i) {
        Triangle tri{part.vertices[0], part.vertices[i], part.vertices[i + 1]};
        const double tri_area = 0.5 * cross(tri.b - tri.a, tri.c - tri.a);
        acc += part.weight * (tri_area / part_area);
        cumulative_.push_back(acc);
        triangles_.push_back(tri);
      }
    }
    if (!cumulative_.empty()) cumulative_.back() = 1.0;
  }

  Point2 sample(std::uint64_t seed, std::uint64_t index) const {
    std::uint64_t state = seed ^ (0xD1B54A32D192ED03ULL * (index + 1));
    (void)detail::splitmix64(state);
    const double r = detail::uniform01(state);
    const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), r);
    const Triangle& tri =
        triangles_[std::min<std::size_t>(it - cumulative_.begin(), triangles_.size() - 1)];
    double u = detail::uniform01(state);
    double v = detail::uniform01(state);
    if (u + v > 1.0) {
      u = 1.0 - u;
      v = 1.0 - v;
    }
    return tri.a + u * (tri.b - tri.a) + v * (tri.c - tri.a);
  }

 private:
  struct Triangle {
    Point2 a, b, c;
  };
  std::vector<Triangle> triangles_;
  std::vector<double> cumulative_;
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

namespace detail {

template <typename Contains>
MonteCarloEstimate monte_carlo(const Mass& mass, long n, std::uint64_t seed,
                               Contains&& contains) {
  if (n < 1) throw std::invalid_argument("monte_carlo_measure: n must be >= 1");
  const MassSampler sampler(mass);
  long hits = 0;
  for (long i = 0; i < n; ++i) {
    if (contains(sampler.sample(seed, static_cast<std::uint64_t>(i)))) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

}  // namespace detail

/// Sampling estimate of a wedge measure; independent oracle for the exact
/// clipping route. stderr is the binomial standard error.
inline MonteCarloEstimate monte_carlo_measure(const Mass& mass, const Wedge& w, long n,
                                              std::uint64_t seed) {
  return detail::monte_carlo(mass, n, seed, [&](Point2 pt) { return wedge_contains(w, pt); });
}

inline MonteCarloEstimate monte_carlo_measure(const Mass& mass, const HalfPlane& h, long n,
                                              std::uint64_t seed) {
  const ClosedHalfPlane nc = normal_form(h);
  return detail::monte_carlo(mass, n, seed,
                             [&](Point2 pt) { return dot(nc.normal, pt) <= nc.offset; });
}

namespace detail {

inline bool wedge_contains_direction(const Wedge& w, double phi) {
  return wrap_two_pi(phi - w.start) <= w.sweep;
}

inline void check_measures_and_sweeps(const Mass& mass, const std::vector<Wedge>& pieces,
                                      double target, double tol, VerifyReport& report) {
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const double err = measure_wedge(mass, pieces[i]) - target;
    report.per_piece_measure_error.push_back(err);
    if (std::abs(err) > tol) {
      report.failures.push_back({"measure", static_cast<int>(i), err,
                                 "piece measure deviates from target by " + std::to_string(err)});
    }
    report.max_sweep = std::max(report.max_sweep, pieces[i].sweep);
    if (pieces[i].sweep > kPi + kConvexSweepSlack) {
      report.failures.push_back({"sweep", static_cast<int>(i), pieces[i].sweep,
                                 "piece is not convex (sweep > pi)"});
    }
  }
}

}  // namespace detail

/// Validates a single-apex cover: piece measures within tol of p/q, all
/// sweeps <= pi, and exact multiplicity p on every open arc between
/// consecutive piece boundary directions. The arc check is combinatorial
/// and does not involve the mass.
inline VerifyReport verify_spiral(const Mass& mass, const SpiralCover& cover,
                                  double tol = 1e-8) {
  VerifyReport report;
  report.multiplicity_method = MultiplicityMethod::ExactArc;
  const double target = static_cast<double>(cover.params.p) / cover.params.q;
  detail::check_measures_and_sweeps(mass, cover.pieces, target, tol, report);

  std::vector<double> cuts;
  cuts.reserve(cover.pieces.size() * 2);
  for (const Wedge& w : cover.pieces) {
    cuts.push_back(wrap_two_pi(w.start));
    cuts.push_back(wrap_two_pi(w.start + w.sweep));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double x, double y) { return std::abs(x - y) < 1e-12; }),
             cuts.end());
  report.multiplicity_ok = true;
  if (cuts.empty()) cuts.push_back(0.0);
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    const double next = j + 1 < cuts.size() ? cuts[j + 1] : cuts[0] + kTwoPi;
    const double mid = 0.5 * (cuts[j] + next);
    int count = 0;
    for (const Wedge& w : cover.pieces) {
      if (detail::wedge_contains_direction(w, mid)) ++count;
    }
    if (count != cover.params.p) {
      report.multiplicity_ok = false;
      report.failures.push_back({"multiplicity", static_cast<int>(j), static_cast<double>(count),
                                 "arc covered " + std::to_string(count) + " times, expected " +
                                     std::to_string(cover.params.p)});
    }
  }
  return report;
}

/// Validates a multi-apex cover; multiplicity is checked on points sampled
/// from the mass, discarding samples within kBoundaryBand of any piece
/// boundary line.
inline VerifyReport verify_general(const Mass& mass, const GeneralCover& cover, double tol,
                                   long n_samples, std::uint64_t seed) {
  if (n_samples < 1000) {
    throw std::invalid_argument("verify_general: n_samples must be >= 1000");
  }
  VerifyReport report;
  report.multiplicity_method = MultiplicityMethod::Sampled;
  const double target = static_cast<double>(cover.target.p) / cover.target.q;
  detail::check_measures_and_sweeps(mass, cover.pieces, target, tol, report);

  struct BoundaryLine {
    Point2 apex;
    Point2 u;
  };
  std::vector<BoundaryLine> lines;
  lines.reserve(cover.pieces.size() * 2);
  for (const Wedge& w : cover.pieces) {
    lines.push_back({w.apex, dir(w.start)});
    lines.push_back({w.apex, dir(w.start + w.sweep)});
  }

  const MassSampler sampler(mass);
  report.multiplicity_ok = true;
  int reported = 0;
  for (long i = 0; i < n_samples; ++i) {
    const Point2 pt = sampler.sample(seed, static_cast<std::uint64_t>(i));
    bool near_boundary = false;
    for (const BoundaryLine& bl : lines) {
      if (std::abs(cross(bl.u, pt - bl.apex)) <= kBoundaryBand) {
        near_boundary = true;
        break;
      }
    }
    if (near_boundary) {
      ++report.samples_discarded;
      continue;
    }
    ++report.samples_tested;
    int count = 0;
    for (const Wedge& w : cover.pieces) {
      if (wedge_contains(w, pt)) ++count;
    }
    if (count != cover.target_multiplicity) {
      report.multiplicity_ok = false;
      if (++reported <= 16) {
        report.failures.push_back({"multiplicity", static_cast<int>(i),
                                   static_cast<double>(count),
                                   "sample covered " + std::to_string(count) +
                                       " times, expected " +
                                       std::to_string(cover.target_multiplicity)});
      }
    }
  }
  if (!report.multiplicity_ok && reported > 16) {
    report.failures.push_back({"multiplicity", -1, static_cast<double>(reported),
                               std::to_string(reported) + " samples with wrong multiplicity"});
  }
  if (report.samples_discarded * 20 > n_samples) {
    report.warnings.push_back("more than 5% of samples fell within the boundary band");
  }
  return report;
}

}  // namespace equicover
