#pragma once

#include "nlwlab/core/trajectory.hpp"

namespace nlwlab {

/// |w(r0,t0) - D(r0,t0,dt)| where D is the one-dimensional d'Alembert/Duhamel
/// formula over the backward cone of height dt:
///   1/2 [w(r0+dt, t0-dt) + w(r0-dt, t0-dt)] + 1/2 int_{r0-dt}^{r0+dt} alpha v(alpha, t0-dt) dalpha
///   + 1/2 int_0^dt int_{r0-(dt-tau)}^{r0+(dt-tau)} G(alpha, t0-dt+tau) dalpha dtau,
/// G = -mu alpha |u|^{p-1} u (zero for linear trajectories). Integrals use the
/// trapezoid rule on stored nodes and snapshots; no time interpolation.
/// Throws std::invalid_argument if r0, t0, dt are off the lattice or the cone
/// leaves the stored domain.
double representation_residual(const Trajectory& traj, double r0, double t0, double dt);

}  // namespace nlwlab
