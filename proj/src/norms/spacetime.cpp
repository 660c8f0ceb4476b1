#include "nlwlab/norms/spacetime.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "nlwlab/core/quadrature.hpp"

namespace nlwlab {

double sp_norm(const Trajectory& traj, double t_begin, double t_end) {
  if (t_end < t_begin) throw std::invalid_argument("sp_norm: interval is reversed");
  if (t_end == t_begin) return 0.0;
  const auto kb = traj.snapshot_index(t_begin);
  const auto ke = traj.snapshot_index(t_end);
  if (!kb || !ke) throw std::invalid_argument("sp_norm: interval endpoints must be snapshot times");
  const std::size_t count = *ke - *kb + 1;
  if (count < 8) throw std::invalid_argument("sp_norm: fewer than 8 snapshots in the interval (stride too coarse)");
  const double q = 2.0 * (traj.params.p - 1.0);
  const auto& grid = traj.grid;
  std::vector<double> in_time(count);
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < count; ++i) {
    const auto& u = traj.states[*kb + i].u();
    for (std::size_t j = 0; j < grid.size(); ++j) f[j] = abs_power(u[j], q) * grid.r(j) * grid.r(j);
    in_time[i] = 4.0 * std::numbers::pi * trapezoid(f, grid.h());
  }
  return std::pow(trapezoid(in_time, traj.snapshot_dt()), 1.0 / q);
}

}  // namespace nlwlab
