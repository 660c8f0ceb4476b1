#include "nlwlab/core/initial_data.hpp"

#include <cmath>
#include <stdexcept>

#include "nlwlab/core/reference.hpp"

namespace nlwlab {

RadialState gaussian_state(const EquationParams& params, const RadialGrid& grid, double width, double amplitude) {
  if (!(width > 0.0)) throw std::invalid_argument("gaussian_state: width must be positive");
  std::vector<double> u(grid.size()), v(grid.size(), 0.0);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.r(j) / width;
    u[j] = amplitude * std::exp(-0.5 * x * x);
  }
  return RadialState(0.0, std::move(u), std::move(v), params, grid);
}

double bump_profile(double r, double radius) {
  const double s = r / radius;
  if (s >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s * s));
}

RadialState bump_state(const EquationParams& params, const RadialGrid& grid, double radius, double amplitude) {
  if (!(radius > 0.0)) throw std::invalid_argument("bump_state: radius must be positive");
  std::vector<double> u(grid.size()), v(grid.size(), 0.0);
  for (std::size_t j = 0; j < grid.size(); ++j) u[j] = amplitude * bump_profile(grid.r(j), radius);
  return RadialState(0.0, std::move(u), std::move(v), params, grid);
}

RadialState ode_flat_state(const EquationParams& params, const RadialGrid& grid, double amplitude) {
  const double T = ode_blowup_time(params, amplitude);
  const double rate = reference_ode_blowup_rate(params, T, 0.0);
  return RadialState(0.0, std::vector<double>(grid.size(), amplitude), std::vector<double>(grid.size(), rate), params,
                     grid);
}

}  // namespace nlwlab
