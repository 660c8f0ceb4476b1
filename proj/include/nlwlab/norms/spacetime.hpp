#pragma once

#include "nlwlab/core/trajectory.hpp"

namespace nlwlab {

/// ||u||_{L^{2(p-1)}_{t,x}} over [t_begin, t_end]: trapezoid in r over the grid
/// and in t over the snapshots. Interval endpoints must be snapshot times; at
/// least 8 snapshots must cover a non-empty interval.
double sp_norm(const Trajectory& traj, double t_begin, double t_end);

}  // namespace nlwlab
