#include "nlwlab/core/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace nlwlab {

double ground_state_W(double r) { return 1.0 / std::sqrt(1.0 + r * r / 3.0); }

double ground_state_W_prime(double r) {
  const double q = 1.0 + r * r / 3.0;
  return -(r / 3.0) / (q * std::sqrt(q));
}

RadialState reference_W(const RadialGrid& grid, double t) {
  std::vector<double> u(grid.size()), v(grid.size(), 0.0);
  for (std::size_t j = 0; j < grid.size(); ++j) u[j] = ground_state_W(grid.r(j));
  return RadialState(t, std::move(u), std::move(v), make_params(5.0, Sign::Focusing), grid);
}

double ode_blowup_coefficient(const EquationParams& params) {
  const double a = params.a;
  return std::pow(a * (a + 1.0), 1.0 / (params.p - 1.0));
}

namespace {
void require_focusing_before(const EquationParams& params, double T, double t) {
  if (!params.focusing()) throw std::invalid_argument("reference_ode_blowup: defocusing flat data does not blow up");
  if (!(t < T)) throw std::invalid_argument("reference_ode_blowup: t must precede the blowup time");
}
}  // namespace

double reference_ode_blowup(const EquationParams& params, double blowup_time, double t) {
  require_focusing_before(params, blowup_time, t);
  return ode_blowup_coefficient(params) * std::pow(blowup_time - t, -params.a);
}

double reference_ode_blowup_rate(const EquationParams& params, double blowup_time, double t) {
  require_focusing_before(params, blowup_time, t);
  return params.a * ode_blowup_coefficient(params) * std::pow(blowup_time - t, -params.a - 1.0);
}

double ode_blowup_time(const EquationParams& params, double amplitude) {
  if (!(amplitude > 0.0)) throw std::invalid_argument("ode_blowup_time: amplitude must be positive");
  return std::pow(ode_blowup_coefficient(params) / amplitude, 1.0 / params.a);
}

}  // namespace nlwlab
