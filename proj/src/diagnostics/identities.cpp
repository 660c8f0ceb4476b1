#include "nlwlab/diagnostics/identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlwlab/core/quadrature.hpp"
#include "nlwlab/diagnostics/energy.hpp"

namespace nlwlab {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

double smoothstep(double x) { return x * x * x * (10.0 + x * (-15.0 + 6.0 * x)); }
double smoothstep_derivative(double x) { return 30.0 * x * x * (1.0 - x) * (1.0 - x); }

// Cutoff-weighted integrals of one state (all with the 4 pi r^2 dr measure).
struct Localized {
  double energy = 0.0;     // int phi e
  double u_ut = 0.0;       // int u u_t phi
  double mult = 0.0;       // int phi (x . grad u) u_t
  double flux = 0.0;       // int u_t grad phi . grad u
  double ut2 = 0.0;        // int phi u_t^2
  double grad2 = 0.0;      // int phi |grad u|^2
  double pow = 0.0;        // int phi |u|^{p+1}
  double u_grad = 0.0;     // int u grad phi . grad u
  double x_ut2 = 0.0;      // int (x . grad phi) u_t^2
  double x_pow = 0.0;      // int (x . grad phi) |u|^{p+1}
  double gphi_xgu = 0.0;   // int (grad phi . grad u)(x . grad u)
  double x_grad2 = 0.0;    // int (x . grad phi) |grad u|^2
};

Localized localize(const RadialState& s, double rc) {
  const auto& g = s.grid();
  const auto& u = s.u();
  const auto& v = s.v();
  const double p = s.params().p;
  const double mu = s.params().mu();
  const auto ur = radial_derivative_even(u, g);
  const std::size_t n = g.size();
  std::vector<std::vector<double>> f(12, std::vector<double>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double r = g.r(j);
    const double r2 = r * r;
    const double phi = cutoff(r, rc);
    const double dphi = cutoff_derivative(r, rc);
    const double up = abs_power(u[j], p + 1.0);
    const double e = 0.5 * ur[j] * ur[j] + 0.5 * v[j] * v[j] + mu * up / (p + 1.0);
    f[0][j] = phi * e * r2;
    f[1][j] = u[j] * v[j] * phi * r2;
    f[2][j] = phi * r * ur[j] * v[j] * r2;
    f[3][j] = v[j] * dphi * ur[j] * r2;
    f[4][j] = phi * v[j] * v[j] * r2;
    f[5][j] = phi * ur[j] * ur[j] * r2;
    f[6][j] = phi * up * r2;
    f[7][j] = u[j] * dphi * ur[j] * r2;
    f[8][j] = r * dphi * v[j] * v[j] * r2;
    f[9][j] = r * dphi * up * r2;
    f[10][j] = dphi * ur[j] * r * ur[j] * r2;
    f[11][j] = r * dphi * ur[j] * ur[j] * r2;
  }
  double q[12];
  for (int k = 0; k < 12; ++k) q[k] = kFourPi * trapezoid(f[k], g.h());
  return {q[0], q[1], q[2], q[3], q[4], q[5], q[6], q[7], q[8], q[9], q[10], q[11]};
}

}  // namespace

double cutoff(double r, double radius) {
  const double s = r / radius;
  if (s <= 1.0) return 1.0;
  if (s >= 2.0) return 0.0;
  return 1.0 - smoothstep(s - 1.0);
}

double cutoff_derivative(double r, double radius) {
  const double s = r / radius;
  if (s <= 1.0 || s >= 2.0) return 0.0;
  return -smoothstep_derivative(s - 1.0) / radius;
}

std::array<double, 3> localized_identity_residuals(const Trajectory& traj, double rc, double t,
                                                   MultiplierConvention convention) {
  if (!(rc > 0.0) || 2.0 * rc > traj.grid.outer_radius()) {
    throw std::invalid_argument("localized_identity_residuals: cutoff exceeds the domain");
  }
  const auto k = traj.snapshot_index(t);
  if (!k || *k == 0 || *k + 1 >= traj.states.size()) {
    throw std::invalid_argument("localized_identity_residuals: t must be an interior snapshot time");
  }
  const Localized lo = localize(traj.states[*k - 1], rc);
  const Localized mid = localize(traj.states[*k], rc);
  const Localized hi = localize(traj.states[*k + 1], rc);
  const double dt2 = 2.0 * traj.snapshot_dt();
  const double p = traj.params.p;
  const double mu = traj.nonlinear ? traj.params.mu() : 0.0;
  const double x_ut2_coeff = convention == MultiplierConvention::Derived ? -0.5 : -1.0;

  // Without the nonlinearity the potential terms drop out of every identity.
  const double pow_mid = traj.nonlinear ? mid.pow : 0.0;
  const double x_pow_mid = traj.nonlinear ? mid.x_pow : 0.0;
  auto energy_of = [&](const Localized& l) {
    return traj.nonlinear ? l.energy : l.energy - traj.params.mu() * l.pow / (p + 1.0);
  };

  const double lhs1 = (energy_of(hi) - energy_of(lo)) / dt2;
  const double rhs1 = -mid.flux;

  const double lhs2 = (hi.u_ut - lo.u_ut) / dt2;
  const double rhs2 = mid.ut2 - mid.grad2 - mu * pow_mid - mid.u_grad;

  const double lhs3 = (hi.mult - lo.mult) / dt2;
  const double rhs3 = -1.5 * mid.ut2 + 3.0 * mu / (p + 1.0) * pow_mid + 0.5 * mid.grad2 + x_ut2_coeff * mid.x_ut2 +
                      mu * x_pow_mid / (p + 1.0) - mid.gphi_xgu + 0.5 * mid.x_grad2;

  return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2), std::abs(lhs3 - rhs3)};
}

std::vector<DiagnosticRecord> diagnose(const Trajectory& traj, double rc) {
  std::vector<DiagnosticRecord> out;
  if (traj.states.size() < 3) return out;
  const double dt2 = 2.0 * traj.snapshot_dt();
  for (std::size_t k = 1; k + 1 < traj.states.size(); ++k) {
    const auto& s = traj.states[k];
    DiagnosticRecord rec;
    rec.t = s.t();
    const auto e = energy_parts(s, traj.nonlinear);
    rec.energy = e.total;
    rec.energy_coercive = e.coercive;
    rec.virial = virial(s);
    rec.virial_rate_lhs = (virial(traj.states[k + 1]) - virial(traj.states[k - 1])) / dt2;
    rec.virial_rate_rhs = virial_rate(s, traj.nonlinear);
    rec.identity_residuals = localized_identity_residuals(traj, rc, s.t());
    const auto sh = support_and_hardy(s);
    rec.support_radius = sh.support_radius;
    rec.hardy_value = sh.hardy_value;
    out.push_back(rec);
  }
  return out;
}

}  // namespace nlwlab
