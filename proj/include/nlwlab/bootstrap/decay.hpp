#pragma once

#include <vector>

#include "nlwlab/core/trajectory.hpp"
#include "nlwlab/norms/radial.hpp"

namespace nlwlab {

/// g2/g1^p and g3/g1^p over dyadic windows [r_k, 4 r_k], r_k = base 2^k.
struct GRecursionWindow {
  GSample g;
  double ratio2 = 0.0;
  double ratio3 = 0.0;
};

struct GRecursionReport {
  std::vector<GRecursionWindow> windows;
  bool vacuous = false;        // g1 vanishes everywhere: ratios are 0/0
  double max_ratio2 = 0.0;
  double max_ratio3 = 0.0;
  double spread2 = 0.0;        // max/min of ratio2 over windows
  double spread3 = 0.0;
  bool g1_monotone = true;     // g1(., t) non-increasing at every stored time
};

/// Throws std::invalid_argument when fewer than 4 windows fit in the grid.
GRecursionReport g_recursion_verify(const Trajectory& traj, double base_radius = 1.0);

/// C0 = max r |u(r,t)| over stored (r, t) with r in [r_lo, r_hi]; slope is the
/// least-squares slope of log sup_t |u(r,t)| against log r on that range.
struct DecayFit {
  double c0 = 0.0;
  double slope = 0.0;
  bool slope_defined = false;  // false when every sample vanishes
  std::size_t samples = 0;
};

/// Requires r_lo >= 1 and at least one node in range.
DecayFit decay_fit(const Trajectory& traj, double r_lo, double r_hi);

}  // namespace nlwlab
