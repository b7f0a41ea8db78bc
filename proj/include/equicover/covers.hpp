#pragma once

#include <numeric>
#include <string>

#include "equicover/mass_model.hpp"

namespace equicover {

/// Reduced fraction p/q, 0 < p < q, gcd(p, q) = 1.
struct CoverParams {
  int p = 0;
  int q = 0;
};

inline void require_reduced(int p, int q) {
  if (p <= 0 || q <= 0 || p >= q) {
    throw std::invalid_argument("cover params: need 0 < p < q");
  }
  if (std::gcd(p, q) != 1) {
    throw std::invalid_argument("cover params: p/q must be in reduced form");
  }
}

/// Feasibility regime of a reduced pair (p, q).
enum class Regime {
  InfeasibleAllMasses,
  ExistsBadMass,
  OpenEvenCase,
  Guaranteed3pMinus3,
  Guaranteed3pMinus2,
  Guaranteed3pMinus1,
  GuaranteedCenterpoint,
  TrivialHalving,
};

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::InfeasibleAllMasses: return "infeasible-all-masses";
    case Regime::ExistsBadMass: return "exists-bad-mass";
    case Regime::OpenEvenCase: return "open-even-case";
    case Regime::Guaranteed3pMinus3: return "guaranteed-3p-3";
    case Regime::Guaranteed3pMinus2: return "guaranteed-3p-2";
    case Regime::Guaranteed3pMinus1: return "guaranteed-3p-1";
    case Regime::GuaranteedCenterpoint: return "guaranteed-centerpoint";
    case Regime::TrivialHalving: return "trivial-halving";
  }
  return "unknown";
}

/// Fan of rays around one apex in which every consecutive wedge carries
/// measure `unit`. Ray angles are a strictly increasing winding sequence
/// spanning less than one turn; the closing wedge wraps to rays[0] + 2*pi.
struct FanConstruction {
  Point2 apex;
  std::vector<double> ray_angles;
  double unit = 0.0;
};

/// Angle of ray `index` (1-based), unwrapping past the full-turn closure:
/// index k+j maps to rays[j] + 2*pi.
inline double fan_ray_angle(const FanConstruction& fan, int index) {
  const int k = static_cast<int>(fan.ray_angles.size());
  if (index < 1 || index > 2 * k) {
    throw std::out_of_range("fan_ray_angle: index out of range");
  }
  return index <= k ? fan.ray_angles[index - 1] : fan.ray_angles[index - k - 1] + kTwoPi;
}

inline Ray fan_ray(const FanConstruction& fan, int index) {
  return {fan.apex, fan_ray_angle(fan, index)};
}

/// The wedges obtained by sweeping ray i to ray i+span for start indices
/// first, first+stride, ... (1-based, k/stride wedges in total).
inline std::vector<Wedge> p_wedges(const FanConstruction& fan, int span, int stride = 1,
                                   int first = 1) {
  const int k = static_cast<int>(fan.ray_angles.size());
  if (span < 1 || span > k) throw std::invalid_argument("p_wedges: span must be in [1, k]");
  if (stride != 1 && stride != 2) throw std::invalid_argument("p_wedges: stride must be 1 or 2");
  if (k % stride != 0) throw std::invalid_argument("p_wedges: stride must divide the fan size");
  std::vector<Wedge> wedges;
  wedges.reserve(k / stride);
  for (int i = first; i < first + k; i += stride) {
    const double start = fan_ray_angle(fan, i);
    const double end = fan_ray_angle(fan, i + span);
    wedges.push_back({fan.apex, start, end - start});
  }
  return wedges;
}

/// Winding ray sequence theta_0 .. theta_n with every consecutive wedge of
/// measure `unit`; may wind past a full turn when n*unit > 1.
inline std::vector<double> measure_winding(const Mass& mass, Point2 apex, double theta0,
                                           int n_wedges, double unit) {
  std::vector<double> rays;
  rays.reserve(n_wedges + 1);
  rays.push_back(theta0);
  for (int i = 0; i < n_wedges; ++i) {
    rays.push_back(ray_at_measure(mass, apex, rays.back(), unit));
  }
  return rays;
}

/// The basic construction: k rays from `apex` starting at theta0 such that
/// each consecutive wedge has measure 1/k.
inline FanConstruction basic_construction(const Mass& mass, Point2 apex, double theta0,
                                          int k) {
  if (k < 2) throw std::invalid_argument("basic_construction: k must be >= 2");
  std::vector<double> rays = measure_winding(mass, apex, theta0, k - 1, 1.0 / k);
  return {apex, std::move(rays), 1.0 / k};
}

enum class OrbitTag { Single, OrbitOdd, OrbitEven };

inline const char* to_string(OrbitTag t) {
  switch (t) {
    case OrbitTag::Single: return "single";
    case OrbitTag::OrbitOdd: return "odd";
    case OrbitTag::OrbitEven: return "even";
  }
  return "unknown";
}

/// Convex (q,p)-spiral candidate: q wedges around one apex, each spanning
/// p consecutive base wedges of the underlying fan (2p of 2q for the
/// doubled constructions).
struct SpiralCover {
  CoverParams params;
  Point2 apex;
  std::vector<double> fan_rays;  // winding angles of the construction rays
  std::vector<Wedge> pieces;
  OrbitTag orbit = OrbitTag::Single;
};

/// Cover by wedges with possibly distinct apexes; almost every point must
/// be covered exactly `target_multiplicity` times.
struct GeneralCover {
  std::vector<Wedge> pieces;
  int target_multiplicity = 0;
  CoverParams target;  // each piece has measure target.p / target.q
};

}  // namespace equicover
