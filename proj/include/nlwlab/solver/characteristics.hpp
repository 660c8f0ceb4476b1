#pragma once

#include "nlwlab/core/fields.hpp"
#include "nlwlab/core/trajectory.hpp"

namespace nlwlab {

/// Largest mismatch between the finite-difference derivative of z1 along
/// (r0 + tau, t0 - tau), and of z2 along (r0 + tau, t0 + tau), and the
/// transported source mu (r0 + tau) |u|^{p-1} u (averaged over each
/// segment), for 0 <= tau <= tau_max sampled on the snapshot lattice.
/// Throws std::invalid_argument when a segment leaves the stored domain.
double characteristic_transport_residual(const Trajectory& traj, double r0, double t0, double tau_max);

}  // namespace nlwlab
