#pragma once

#include <span>
#include <vector>

#include "nlwlab/core/grid.hpp"

namespace nlwlab {

/// Composite trapezoid of node values over the whole grid.
double trapezoid(std::span<const double> f, double h);

/// Trapezoid of node values over [lo, hi], with the integrand interpolated
/// linearly at endpoints that fall between nodes.
double trapezoid_range(std::span<const double> f, const RadialGrid& grid, double lo, double hi);

/// d/dr of an even function sampled on the grid: central differences inside,
/// zero at the origin, second-order one-sided at the outer node.
std::vector<double> radial_derivative_even(std::span<const double> f, const RadialGrid& grid);

/// d/dr of an odd function (odd reflection at the origin).
std::vector<double> radial_derivative_odd(std::span<const double> f, const RadialGrid& grid);

/// |x|^{p-1} x, with an exact multiplication path for integer p.
double signed_power(double x, double p);

/// |x|^q for q > 0, with the same integer fast path.
double abs_power(double x, double q);

}  // namespace nlwlab
