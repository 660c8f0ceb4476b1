#pragma once

#include <span>

#include "nlwlab/core/grid.hpp"

namespace nlwlab {

/// ||phi||^2 in Hdot^beta(R^3) for radial phi, from the radial spectrum:
/// (2 pi)^{-3} 4 pi int rho^{2 beta + 2} |phi_hat|^2 d rho. beta in [0, 3/2);
/// throws std::invalid_argument otherwise.
double sobolev_norm_squared(std::span<const double> phi, const RadialGrid& grid, double beta);
double sobolev_norm(std::span<const double> phi, const RadialGrid& grid, double beta);

/// Second route: 2 pi ||s phi(s)||^2 in Hdot^beta(R), with s phi(s) extended
/// oddly to [-R, R) and transformed as a periodic one-dimensional signal.
double sobolev_norm_squared_1d(std::span<const double> phi, const RadialGrid& grid, double beta);

/// 4 pi int phi^2 r^2 dr by the trapezoid rule.
double l2_norm_squared(std::span<const double> phi, const RadialGrid& grid);

}  // namespace nlwlab
