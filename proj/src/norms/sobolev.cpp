#include "nlwlab/norms/sobolev.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "nlwlab/core/io.hpp"
#include "nlwlab/core/log.hpp"
#include "nlwlab/core/quadrature.hpp"
#include "nlwlab/norms/fourier.hpp"
#include "fftw_lock.hpp"

namespace nlwlab {

namespace {

constexpr double kPi = std::numbers::pi;

// The weight rho^{2 beta + 2} is not smooth at rho = 0 for non-integer beta,
// which limits the frequency-sum accuracy to O(drho^{2 beta + 3}). Padding
// with zeros refines drho = pi / R without changing the data.
constexpr std::size_t kOversample = 4;

void require_beta(double beta) {
  if (!(beta >= 0.0 && beta < 1.5)) throw std::invalid_argument("sobolev_norm: beta must lie in [0, 3/2)");
}

void warn_if_undecayed(std::span<const double> phi, const char* who) {
  const double tail = boundary_tail(phi);
  if (tail > 1e-12) warn(std::string(who) + ": input has not decayed at the outer boundary (|phi| = " + format_double(tail) + ")");
}

}  // namespace

double sobolev_norm_squared(std::span<const double> phi, const RadialGrid& grid, double beta) {
  require_beta(beta);
  if (phi.size() != grid.size()) throw std::invalid_argument("sobolev_norm: sample count does not match the grid");
  warn_if_undecayed(phi, "sobolev_norm");
  const RadialGrid padded_grid(grid.h(), kOversample * grid.n());
  std::vector<double> padded(padded_grid.size(), 0.0);
  std::copy(phi.begin(), phi.end(), padded.begin());
  const auto spec = radial_fourier(padded, padded_grid, HUGE_VAL);
  // Endpoint terms vanish: rho^{2 beta + 2} = 0 at k = 0 and the transform is 0 at k = n.
  double s = 0.0;
  for (std::size_t k = 1; k < spec.rho.size(); ++k) {
    const double rho = spec.rho[k];
    s += std::pow(rho, 2.0 * beta + 2.0) * spec.values[k] * spec.values[k];
  }
  return 4.0 * kPi * s * spec.drho / std::pow(2.0 * kPi, 3);
}

double sobolev_norm(std::span<const double> phi, const RadialGrid& grid, double beta) {
  return std::sqrt(sobolev_norm_squared(phi, grid, beta));
}

double sobolev_norm_squared_1d(std::span<const double> phi, const RadialGrid& grid, double beta) {
  require_beta(beta);
  if (phi.size() != grid.size()) throw std::invalid_argument("sobolev_norm_1d: sample count does not match the grid");
  warn_if_undecayed(phi, "sobolev_norm_1d");
  const std::size_t n = grid.n();
  const std::size_t len = 2 * kOversample * n;
  const std::size_t half = len / 2;
  double* in = fftw_alloc_real(len);
  fftw_complex* out = fftw_alloc_complex(half + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(len), in, out, FFTW_ESTIMATE);
  }
  std::fill(in, in + len, 0.0);
  for (std::size_t j = 1; j < n; ++j) {
    const double f = grid.r(j) * phi[j];
    in[j] = f;
    in[len - j] = -f;
  }
  fftw_execute(plan);
  // (2 pi)^{-1} sum over k = -(N-1)..(N-1) of |xi_k|^{2 beta} |h F_k|^2 dxi on
  // the padded period 2 N h.
  const double dxi = kPi / (static_cast<double>(half) * grid.h());
  const double h = grid.h();
  double s = 0.0;
  for (std::size_t k = 1; k < half; ++k) {
    const double xi = static_cast<double>(k) * dxi;
    const double mag2 = out[k][0] * out[k][0] + out[k][1] * out[k][1];
    s += 2.0 * std::pow(xi, 2.0 * beta) * h * h * mag2;
  }
  {
    std::lock_guard lock(detail::fftw_planner_mutex());
    fftw_destroy_plan(plan);
  }
  fftw_free(in);
  fftw_free(out);
  const double norm1d = s * dxi / (2.0 * kPi);
  return 2.0 * kPi * norm1d;
}

double l2_norm_squared(std::span<const double> phi, const RadialGrid& grid) {
  std::vector<double> f(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) f[j] = phi[j] * phi[j] * grid.r(j) * grid.r(j);
  return 4.0 * kPi * trapezoid(f, grid.h());
}

}  // namespace nlwlab
