#include "nlwlab/diagnostics/energy.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "nlwlab/core/quadrature.hpp"

namespace nlwlab {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

EnergyParts energy_parts(const RadialState& s, bool nonlinear) {
  const auto& g = s.grid();
  const auto& u = s.u();
  const auto& v = s.v();
  const double p = s.params().p;
  const auto ur = radial_derivative_even(u, g);
  std::vector<double> grad(g.size()), kin(g.size()), pot(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double r2 = g.r(j) * g.r(j);
    grad[j] = 0.5 * ur[j] * ur[j] * r2;
    kin[j] = 0.5 * v[j] * v[j] * r2;
    pot[j] = abs_power(u[j], p + 1.0) / (p + 1.0) * r2;
  }
  EnergyParts e;
  e.gradient = kFourPi * trapezoid(grad, g.h());
  e.kinetic = kFourPi * trapezoid(kin, g.h());
  e.potential = kFourPi * trapezoid(pot, g.h());
  e.coercive = !s.params().focusing();
  e.total = e.gradient + e.kinetic + (nonlinear ? s.params().mu() * e.potential : 0.0);
  return e;
}

double energy(const RadialState& s, bool nonlinear) { return energy_parts(s, nonlinear).total; }

double virial(const RadialState& s) {
  const auto& g = s.grid();
  const auto ur = radial_derivative_even(s.u(), g);
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double r = g.r(j);
    f[j] = (s.u()[j] + r * ur[j]) * s.v()[j] * r * r;
  }
  return kFourPi * trapezoid(f, g.h());
}

double virial_rate(const RadialState& s, bool nonlinear) {
  const auto e = energy_parts(s);
  const double p = s.params().p;
  // Integrals without the 1/2 and 1/(p+1) factors carried by EnergyParts.
  const double int_v2 = 2.0 * e.kinetic;
  const double int_grad2 = 2.0 * e.gradient;
  const double int_pow = (p + 1.0) * e.potential;
  return -0.5 * int_v2 - 0.5 * int_grad2 - (nonlinear ? s.params().mu() : 0.0) * (1.0 - 3.0 / (p + 1.0)) * int_pow;
}

SupportHardy support_and_hardy(const RadialState& s, double floor) {
  const auto& g = s.grid();
  SupportHardy out;
  for (std::size_t j = g.size(); j-- > 0;) {
    if (std::max(std::abs(s.u()[j]), std::abs(s.v()[j])) > floor) {
      out.support_radius = g.r(j);
      break;
    }
  }
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = s.u()[j] * s.u()[j];
  out.hardy_value = kFourPi * trapezoid(f, g.h());
  return out;
}

}  // namespace nlwlab
