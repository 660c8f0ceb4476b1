#pragma once

#include "nlwlab/core/state.hpp"

namespace nlwlab {

/// W(r) = (1 + r^2/3)^{-1/2}, the static solution of the focusing quintic
/// equation.
double ground_state_W(double r);
double ground_state_W_prime(double r);

/// W sampled on the grid with zero velocity (p = 5, focusing).
RadialState reference_W(const RadialGrid& grid, double t = 0.0);

/// c_p with c_p^{p-1} = a(a+1).
double ode_blowup_coefficient(const EquationParams& params);

/// Spatially homogeneous focusing solution c_p (T - t)^{-a} of u'' = |u|^{p-1} u.
/// Throws std::invalid_argument when the parameters are defocusing or t >= T.
double reference_ode_blowup(const EquationParams& params, double blowup_time, double t);
double reference_ode_blowup_rate(const EquationParams& params, double blowup_time, double t);

/// Blowup time of the flat solution that starts with value `amplitude` at t = 0.
double ode_blowup_time(const EquationParams& params, double amplitude);

}  // namespace nlwlab
