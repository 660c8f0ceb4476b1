#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nlwlab/core/state.hpp"

namespace nlwlab {

/// Scalar diagnostics logged once per solver step.
struct StepRecord {
  double t = 0.0;
  double energy = 0.0;
  double virial = 0.0;
  double max_abs_u = 0.0;
  double support_radius = 0.0;
};

/// Snapshots of an evolution on a uniform time lattice. Consecutive snapshots
/// are `stride` solver steps apart and the step equals the grid spacing.
struct Trajectory {
  EquationParams params;
  RadialGrid grid;
  bool nonlinear = true;
  std::size_t stride = 1;
  std::vector<RadialState> states;
  std::vector<StepRecord> step_log;
  /// Last computed time level when it does not fall on the snapshot lattice.
  std::optional<RadialState> final_state;

  double snapshot_dt() const { return static_cast<double>(stride) * grid.h(); }
  double t_begin() const { return states.front().t(); }
  double t_end() const { return states.back().t(); }

  /// Index of the snapshot at time t, if t lies on the snapshot lattice.
  std::optional<std::size_t> snapshot_index(double t) const;

  /// The most recent state, whether or not it is a snapshot.
  const RadialState& last() const { return final_state ? *final_state : states.back(); }
};

/// Trajectory holding `count` copies of a static state at times
/// t0 + k*stride*h. Used for exact stationary solutions.
Trajectory static_trajectory(const RadialState& s, std::size_t count, std::size_t stride = 1);

}  // namespace nlwlab
