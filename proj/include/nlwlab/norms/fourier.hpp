#pragma once

#include <span>
#include <vector>

#include "nlwlab/core/grid.hpp"

namespace nlwlab {

/// Samples of the three-dimensional Fourier transform of a radial function,
///   phi_hat(rho) = (4 pi / rho) int_0^inf sin(rho s) phi(s) s ds,
/// on rho_k = k pi / R, k = 0..n-1. With this constant Plancherel reads
/// ||phi||^2_{L^2} = (2 pi)^{-3} ||phi_hat||^2_{L^2}.
struct RadialSpectrum {
  double drho = 0.0;
  std::vector<double> rho;
  std::vector<double> values;
};

/// Trapezoid quadrature of the sine transform evaluated with a fast DST-I.
/// Warns when |phi| exceeds `decay_threshold` on the outermost nodes.
RadialSpectrum radial_fourier(std::span<const double> phi, const RadialGrid& grid, double decay_threshold = 1e-12);

/// The same quadrature by direct O(n^2) summation.
RadialSpectrum radial_fourier_direct(std::span<const double> phi, const RadialGrid& grid);

/// max |phi| over the outermost two nodes.
double boundary_tail(std::span<const double> phi);

}  // namespace nlwlab
