#include "nlwlab/solver/characteristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nlwlab/core/quadrature.hpp"

namespace nlwlab {

double characteristic_transport_residual(const Trajectory& traj, double r0, double t0, double tau_max) {
  const auto& g = traj.grid;
  const double dt = traj.snapshot_dt();
  const std::size_t stride = traj.stride;
  std::size_t j0 = 0;
  if (!g.node_index(r0, j0)) throw std::invalid_argument("characteristic_transport_residual: r0 off the grid");
  const auto k0 = traj.snapshot_index(t0);
  if (!k0) throw std::invalid_argument("characteristic_transport_residual: t0 is not a snapshot time");
  const auto count = static_cast<std::size_t>(std::floor(tau_max / dt + 1e-9));
  if (j0 + count * stride > g.n() || count > *k0 || *k0 + count >= traj.states.size()) {
    throw std::invalid_argument("characteristic_transport_residual: segment leaves the stored domain");
  }
  if (count == 0) return 0.0;

  const double p = traj.params.p;
  const double mu = traj.nonlinear ? traj.params.mu() : 0.0;
  auto transported = [&](const RadialState& s, std::size_t j) { return mu * g.r(j) * signed_power(s.u()[j], p); };

  double worst = 0.0;
  // z1 along (r0 + tau, t0 - tau), z2 along (r0 + tau, t0 + tau).
  for (int dir : {-1, +1}) {
    std::size_t k_prev = *k0;
    std::size_t j_prev = j0;
    auto fields_prev = characteristic_fields(traj.states[k_prev]);
    for (std::size_t i = 1; i <= count; ++i) {
      const std::size_t k = dir < 0 ? *k0 - i : *k0 + i;
      const std::size_t j = j0 + i * stride;
      const auto fields = characteristic_fields(traj.states[k]);
      const auto& z_prev = dir < 0 ? fields_prev.z1 : fields_prev.z2;
      const auto& z = dir < 0 ? fields.z1 : fields.z2;
      const double lhs = (z[j] - z_prev[j_prev]) / dt;
      const double rhs = 0.5 * (transported(traj.states[k_prev], j_prev) + transported(traj.states[k], j));
      worst = std::max(worst, std::abs(lhs - rhs));
      k_prev = k;
      j_prev = j;
      fields_prev = fields;
    }
  }
  return worst;
}

}  // namespace nlwlab
