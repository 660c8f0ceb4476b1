#include "nlwlab/core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlwlab {

double trapezoid(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t j = 1; j + 1 < f.size(); ++j) s += f[j];
  return s * h;
}

double trapezoid_range(std::span<const double> f, const RadialGrid& grid, double lo, double hi) {
  if (f.size() != grid.size()) throw std::invalid_argument("trapezoid_range: size mismatch");
  lo = std::max(lo, 0.0);
  hi = std::min(hi, grid.outer_radius());
  if (!(hi > lo)) return 0.0;
  const double h = grid.h();
  auto sample = [&](double r) {
    const double x = r / h;
    const auto j = std::min(static_cast<std::size_t>(std::floor(x)), grid.n() - 1);
    const double s = x - static_cast<double>(j);
    return (1.0 - s) * f[j] + s * f[j + 1];
  };
  // Nodes strictly inside (lo, hi).
  const auto first = static_cast<std::size_t>(std::floor(lo / h)) + 1;
  const auto last = static_cast<std::size_t>(std::ceil(hi / h)) - 1;
  const double flo = sample(lo);
  const double fhi = sample(hi);
  if (first > last) return 0.5 * (flo + fhi) * (hi - lo);
  double s = 0.5 * (flo + f[first]) * (grid.r(first) - lo);
  for (std::size_t j = first; j < last; ++j) s += 0.5 * (f[j] + f[j + 1]) * h;
  s += 0.5 * (f[last] + fhi) * (hi - grid.r(last));
  return s;
}

std::vector<double> radial_derivative_even(std::span<const double> f, const RadialGrid& grid) {
  const std::size_t n = grid.n();
  const double h = grid.h();
  std::vector<double> d(f.size());
  d[0] = 0.0;
  for (std::size_t j = 1; j < n; ++j) d[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
  d[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h);
  return d;
}

std::vector<double> radial_derivative_odd(std::span<const double> f, const RadialGrid& grid) {
  const std::size_t n = grid.n();
  const double h = grid.h();
  std::vector<double> d(f.size());
  d[0] = f[1] / h;
  for (std::size_t j = 1; j < n; ++j) d[j] = (f[j + 1] - f[j - 1]) / (2.0 * h);
  d[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h);
  return d;
}

namespace {
bool small_integer(double q, int& k) {
  if (q >= 1.0 && q <= 32.0 && q == std::floor(q)) {
    k = static_cast<int>(q);
    return true;
  }
  return false;
}
double int_power(double x, int k) {
  double r = 1.0;
  double b = x;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}
}  // namespace

double abs_power(double x, double q) {
  const double ax = std::abs(x);
  int k = 0;
  if (small_integer(q, k)) return int_power(ax, k);
  return ax == 0.0 ? 0.0 : std::pow(ax, q);
}

double signed_power(double x, double p) {
  int k = 0;
  if (small_integer(p, k) && (k % 2 == 1)) return int_power(x, k);
  return abs_power(x, p - 1.0) * x;
}

}  // namespace nlwlab
