#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlwlab/core/trajectory.hpp"

namespace nlwlab {

/// Both sides of one radial embedding inequality lhs <= C rhs.
struct EmbeddingPair {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// lhs/rhs, or 0 when both sides vanish.
  double ratio() const { return rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? HUGE_VAL : 0.0); }
};

struct EmbeddingReport {
  double beta = 0.0;
  double m = 0.0;
  std::vector<EmbeddingPair> pairs;
};

/// For beta in [0, 1/2), m = 1/(1/2 - beta):
///   ||r^{1-2/m} phi||_{L^m} vs ||phi||_{Hdot^beta}.
/// For beta in [1, 3/2), m = 1/(3/2 - beta):
///   ||r^{1-2/m} d_r phi||_{L^m} and ||r^{1/m} phi||_{L^inf} vs ||phi||_{Hdot^beta}.
/// L^m norms use the 3D measure, which reduces to 4 pi int |r f|^m dr.
/// Throws std::invalid_argument for beta in [1/2, 1) or outside [0, 3/2), or
/// when an explicit m does not match beta.
EmbeddingReport embedding_check(std::span<const double> phi, const RadialGrid& grid, double beta,
                                std::optional<double> m = std::nullopt);

/// Decay moduli at radius r: g1 = sup_{alpha >= r} alpha^a |u|, and the L^m
/// norms of z1 (g2) and z2 (g3) over [r, 4r].
struct GSample {
  double r = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
};

/// Throws std::invalid_argument if 4 max(radii) exceeds the grid.
std::vector<GSample> g_moduli(const RadialState& s, std::span<const double> radii);

/// Supremum over the stored snapshots.
std::vector<GSample> g_moduli(const Trajectory& traj, std::span<const double> radii);

/// Tails from r to R: (int |s d_r u|^m)^{1/m}, (int |s d_t u|^m)^{1/m} and
/// their L^2 counterparts.
struct TailRecord {
  double r = 0.0;
  double lm_dr = 0.0;
  double lm_dt = 0.0;
  double l2_dr = 0.0;
  double l2_dt = 0.0;
};

/// Requires r <= R - 2h.
TailRecord tail_norms(const RadialState& s, double r);

}  // namespace nlwlab
