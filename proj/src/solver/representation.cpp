#include "nlwlab/solver/representation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nlwlab/core/quadrature.hpp"

namespace nlwlab {

namespace {
// Trapezoid of f over nodes lo..hi inclusive.
template <typename F>
double node_trapezoid(std::size_t lo, std::size_t hi, double h, F&& f) {
  if (hi <= lo) return 0.0;
  double s = 0.5 * (f(lo) + f(hi));
  for (std::size_t j = lo + 1; j < hi; ++j) s += f(j);
  return s * h;
}
}  // namespace

double representation_residual(const Trajectory& traj, double r0, double t0, double dt) {
  const auto& g = traj.grid;
  const double h = g.h();
  const std::size_t stride = traj.stride;
  std::size_t j0 = 0;
  if (!g.node_index(r0, j0)) throw std::invalid_argument("representation_residual: r0 off the grid");
  const auto k0 = traj.snapshot_index(t0);
  if (!k0) throw std::invalid_argument("representation_residual: t0 is not a snapshot time");
  const double levels_f = dt / traj.snapshot_dt();
  const double levels_r = std::round(levels_f);
  if (levels_r < 0.0 || std::abs(levels_f - levels_r) > 1e-9 * std::max(1.0, levels_f)) {
    throw std::invalid_argument("representation_residual: dt is not on the snapshot lattice");
  }
  const auto levels = static_cast<std::size_t>(levels_r);
  const std::size_t half_width = levels * stride;  // dt in grid cells
  if (levels > *k0) throw std::invalid_argument("representation_residual: cone starts before the trajectory");
  if (half_width >= j0 || j0 + half_width > g.n()) {
    throw std::invalid_argument("representation_residual: cone leaves the radial domain");
  }

  const auto& now = traj.states[*k0];
  const auto& base = traj.states[*k0 - levels];
  const double w_now = r0 * now.u()[j0];
  if (levels == 0) return 0.0;

  const std::size_t jl = j0 - half_width;
  const std::size_t jr = j0 + half_width;
  double rhs = 0.5 * (g.r(jr) * base.u()[jr] + g.r(jl) * base.u()[jl]);
  rhs += 0.5 * node_trapezoid(jl, jr, h, [&](std::size_t j) { return g.r(j) * base.v()[j]; });

  if (traj.nonlinear) {
    const double p = traj.params.p;
    const double mu = traj.params.mu();
    // Inner integral at each time level tau_i = i * snapshot_dt; zero at the apex.
    std::vector<double> inner(levels + 1, 0.0);
    for (std::size_t i = 0; i < levels; ++i) {
      const auto& s = traj.states[*k0 - levels + i];
      const std::size_t reach = (levels - i) * stride;
      inner[i] = node_trapezoid(j0 - reach, j0 + reach, h,
                                [&](std::size_t j) { return -mu * g.r(j) * signed_power(s.u()[j], p); });
    }
    rhs += 0.5 * trapezoid(inner, traj.snapshot_dt());
  }
  return std::abs(w_now - rhs);
}

}  // namespace nlwlab
