#pragma once

#include "nlwlab/core/state.hpp"

namespace nlwlab {

/// u = amplitude * exp(-r^2 / (2 width^2)), v = 0.
RadialState gaussian_state(const EquationParams& params, const RadialGrid& grid, double width, double amplitude);

/// Smooth compactly supported bump: u = amplitude * exp(1 - 1/(1 - (r/radius)^2))
/// for r < radius, 0 beyond; v = 0.
RadialState bump_state(const EquationParams& params, const RadialGrid& grid, double radius, double amplitude);
double bump_profile(double r, double radius);

/// Spatially flat data (amplitude, d/dt of c_p (T - t)^{-a} at t = 0) of the
/// focusing ODE solution that starts at `amplitude`.
RadialState ode_flat_state(const EquationParams& params, const RadialGrid& grid, double amplitude);

}  // namespace nlwlab
