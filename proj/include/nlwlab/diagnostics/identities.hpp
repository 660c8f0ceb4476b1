#pragma once

#include <array>
#include <vector>

#include "nlwlab/core/trajectory.hpp"

namespace nlwlab {

/// Cutoff phi_R(r) = q(r/R) with q = 1 on [0,1], 0 on [2,inf) and a quintic
/// smoothstep in between.
double cutoff(double r, double radius);
double cutoff_derivative(double r, double radius);

/// Coefficient of int (x . grad phi_R)(d_t u)^2 in the multiplier identity.
/// The integration-by-parts value is -1/2; the printed form of the identity
/// carries -1 and is kept selectable so tests can show the difference.
enum class MultiplierConvention { Derived, Printed };

/// |d/dt(left side) - right side| for the localized energy flux (i), the
/// u d_t u identity (ii) and the x . grad u multiplier identity (iii), at
/// snapshot time t with cutoff radius Rc. The time derivative is a central
/// difference over neighbouring snapshots. Throws std::invalid_argument when
/// t is not an interior snapshot or 2 Rc exceeds the grid.
std::array<double, 3> localized_identity_residuals(const Trajectory& traj, double cutoff_radius, double t,
                                                   MultiplierConvention convention = MultiplierConvention::Derived);

/// Per-snapshot diagnostics.
struct DiagnosticRecord {
  double t = 0.0;
  double energy = 0.0;
  bool energy_coercive = true;
  double virial = 0.0;
  double virial_rate_lhs = 0.0;  // central difference of z over snapshots
  double virial_rate_rhs = 0.0;  // closed form
  std::array<double, 3> identity_residuals{};
  double support_radius = 0.0;
  double hardy_value = 0.0;
};

/// Records for every interior snapshot of the trajectory.
std::vector<DiagnosticRecord> diagnose(const Trajectory& traj, double cutoff_radius);

}  // namespace nlwlab
