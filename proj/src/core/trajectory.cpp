#include "nlwlab/core/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace nlwlab {

std::optional<std::size_t> Trajectory::snapshot_index(double t) const {
  if (states.empty()) return std::nullopt;
  const double x = (t - t_begin()) / snapshot_dt();
  const double k = std::round(x);
  if (k < 0.0 || k >= static_cast<double>(states.size())) return std::nullopt;
  if (std::abs(x - k) > 1e-7) return std::nullopt;
  return static_cast<std::size_t>(k);
}

Trajectory static_trajectory(const RadialState& s, std::size_t count, std::size_t stride) {
  if (count == 0 || stride == 0) throw std::invalid_argument("static_trajectory: empty lattice");
  Trajectory traj;
  traj.params = s.params();
  traj.grid = s.grid();
  traj.stride = stride;
  const double dt = static_cast<double>(stride) * s.grid().h();
  for (std::size_t k = 0; k < count; ++k) {
    traj.states.emplace_back(s.t() + static_cast<double>(k) * dt, s.u(), s.v(), s.params(), s.grid());
  }
  return traj;
}

}  // namespace nlwlab
