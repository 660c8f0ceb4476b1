#include "nlwlab/norms/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "nlwlab/core/io.hpp"
#include "nlwlab/core/log.hpp"
#include "fftw_lock.hpp"

namespace nlwlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Y_k = 2 sum_i x_i sin(pi (i+1)(k+1)/(N+1)), k = 0..N-1.
std::vector<double> dst1(const std::vector<double>& x) {
  const int size = static_cast<int>(x.size());
  double* in = fftw_alloc_real(x.size());
  double* out = fftw_alloc_real(x.size());
  fftw_plan plan;
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    plan = fftw_plan_r2r_1d(size, in, out, FFTW_RODFT00, FFTW_ESTIMATE);
  }
  std::copy(x.begin(), x.end(), in);
  fftw_execute(plan);
  std::vector<double> y(out, out + x.size());
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  return y;
}

RadialSpectrum empty_spectrum(const RadialGrid& grid) {
  RadialSpectrum s;
  s.drho = kPi / grid.outer_radius();
  s.rho.resize(grid.n());
  for (std::size_t k = 0; k < grid.n(); ++k) s.rho[k] = static_cast<double>(k) * s.drho;
  s.values.assign(grid.n(), 0.0);
  return s;
}

double zero_frequency(std::span<const double> phi, const RadialGrid& grid) {
  double s = 0.0;
  for (std::size_t j = 1; j < grid.n(); ++j) s += grid.r(j) * grid.r(j) * phi[j];
  return 4.0 * kPi * grid.h() * s;
}

void require_size(std::span<const double> phi, const RadialGrid& grid) {
  if (phi.size() != grid.size()) throw std::invalid_argument("radial_fourier: sample count does not match the grid");
}

}  // namespace

double boundary_tail(std::span<const double> phi) {
  if (phi.size() < 2) return 0.0;
  return std::max(std::abs(phi[phi.size() - 1]), std::abs(phi[phi.size() - 2]));
}

RadialSpectrum radial_fourier(std::span<const double> phi, const RadialGrid& grid, double decay_threshold) {
  require_size(phi, grid);
  const double tail = boundary_tail(phi);
  if (tail > decay_threshold) {
    warn("radial_fourier: input has not decayed at the outer boundary (|phi| = " + format_double(tail) + ")");
  }
  auto spec = empty_spectrum(grid);
  spec.values[0] = zero_frequency(phi, grid);
  const std::size_t n = grid.n();
  if (n < 2) return spec;
  std::vector<double> x(n - 1);
  for (std::size_t j = 1; j < n; ++j) x[j - 1] = grid.r(j) * phi[j];
  const auto y = dst1(x);
  const double c = 4.0 * kPi * grid.h();
  for (std::size_t k = 1; k < n; ++k) spec.values[k] = c * 0.5 * y[k - 1] / spec.rho[k];
  return spec;
}

RadialSpectrum radial_fourier_direct(std::span<const double> phi, const RadialGrid& grid) {
  require_size(phi, grid);
  auto spec = empty_spectrum(grid);
  spec.values[0] = zero_frequency(phi, grid);
  const std::size_t n = grid.n();
  const double c = 4.0 * kPi * grid.h();
  for (std::size_t k = 1; k < n; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
      // Reduce the phase exactly before calling sin.
      const std::size_t q = (j * k) % (2 * n);
      s += std::sin(kPi * static_cast<double>(q) / static_cast<double>(n)) * grid.r(j) * phi[j];
    }
    spec.values[k] = c * s / spec.rho[k];
  }
  return spec;
}

}  // namespace nlwlab
