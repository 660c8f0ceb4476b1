#include "nlwlab/norms/radial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nlwlab/core/fields.hpp"
#include "nlwlab/core/quadrature.hpp"
#include "nlwlab/norms/sobolev.hpp"

namespace nlwlab {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

// (int_lo^hi |f|^q dr)^{1/q} with f sampled on the grid.
double lq_range(const std::vector<double>& f, const RadialGrid& grid, double q, double lo, double hi) {
  std::vector<double> g(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) g[j] = abs_power(f[j], q);
  return std::pow(std::max(0.0, trapezoid_range(g, grid, lo, hi)), 1.0 / q);
}

bool close(double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(1.0, std::abs(y)); }

}  // namespace

EmbeddingReport embedding_check(std::span<const double> phi, const RadialGrid& grid, double beta,
                                std::optional<double> m_in) {
  if (phi.size() != grid.size()) throw std::invalid_argument("embedding_check: sample count does not match the grid");
  EmbeddingReport rep;
  rep.beta = beta;
  const bool low = beta >= 0.0 && beta < 0.5;
  const bool high = beta >= 1.0 && beta < 1.5;
  if (!low && !high) throw std::invalid_argument("embedding_check: beta must lie in [0, 1/2) or [1, 3/2)");
  rep.m = low ? 1.0 / (0.5 - beta) : 1.0 / (1.5 - beta);
  if (m_in && !close(*m_in, rep.m)) {
    throw std::invalid_argument("embedding_check: m does not match beta (expected m = " + std::to_string(rep.m) + ")");
  }
  const double m = rep.m;
  const double rhs = sobolev_norm(phi, grid, beta);
  const double R = grid.outer_radius();
  std::vector<double> rf(grid.size());
  if (low) {
    for (std::size_t j = 0; j < grid.size(); ++j) rf[j] = grid.r(j) * phi[j];
    const double lhs = std::pow(kFourPi, 1.0 / m) * lq_range(rf, grid, m, 0.0, R);
    rep.pairs.push_back({"weighted_lm", lhs, rhs});
  } else {
    const auto d = radial_derivative_even(phi, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) rf[j] = grid.r(j) * d[j];
    const double lhs_d = std::pow(kFourPi, 1.0 / m) * lq_range(rf, grid, m, 0.0, R);
    double sup = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) sup = std::max(sup, std::pow(grid.r(j), 1.0 / m) * std::abs(phi[j]));
    rep.pairs.push_back({"weighted_lm_derivative", lhs_d, rhs});
    rep.pairs.push_back({"weighted_sup", sup, rhs});
  }
  return rep;
}

std::vector<GSample> g_moduli(const RadialState& s, std::span<const double> radii) {
  const auto& grid = s.grid();
  const double R = grid.outer_radius();
  for (double r : radii) {
    if (!(r > 0.0) || 4.0 * r > R * (1.0 + 1e-12)) throw std::invalid_argument("g_moduli: window [r, 4r] exceeds the grid");
  }
  const double a = s.params().a;
  const double m = s.params().m;
  // Suffix maxima of alpha^a |u|.
  std::vector<double> suffix(grid.size());
  double run = 0.0;
  for (std::size_t j = grid.size(); j-- > 0;) {
    run = std::max(run, std::pow(grid.r(j), a) * std::abs(s.u()[j]));
    suffix[j] = run;
  }
  const auto z = characteristic_fields(s);
  std::vector<GSample> out;
  out.reserve(radii.size());
  for (double r : radii) {
    GSample g;
    g.r = r;
    const auto j = static_cast<std::size_t>(std::ceil(r / grid.h() - 1e-9));
    g.g1 = j < grid.size() ? suffix[j] : 0.0;
    g.g2 = lq_range(z.z1, grid, m, r, 4.0 * r);
    g.g3 = lq_range(z.z2, grid, m, r, 4.0 * r);
    out.push_back(g);
  }
  return out;
}

std::vector<GSample> g_moduli(const Trajectory& traj, std::span<const double> radii) {
  std::vector<GSample> out;
  for (const auto& s : traj.states) {
    auto cur = g_moduli(s, radii);
    if (out.empty()) {
      out = std::move(cur);
      continue;
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i].g1 = std::max(out[i].g1, cur[i].g1);
      out[i].g2 = std::max(out[i].g2, cur[i].g2);
      out[i].g3 = std::max(out[i].g3, cur[i].g3);
    }
  }
  return out;
}

TailRecord tail_norms(const RadialState& s, double r) {
  const auto& grid = s.grid();
  const double R = grid.outer_radius();
  if (!(r >= 0.0) || r > R - 2.0 * grid.h() + 1e-12 * R) throw std::invalid_argument("tail_norms: r must be <= R - 2h");
  const auto ur = radial_derivative_even(s.u(), grid);
  std::vector<double> sdr(grid.size()), sdt(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    sdr[j] = grid.r(j) * ur[j];
    sdt[j] = grid.r(j) * s.v()[j];
  }
  const double m = s.params().m;
  TailRecord t;
  t.r = r;
  t.lm_dr = lq_range(sdr, grid, m, r, R);
  t.lm_dt = lq_range(sdt, grid, m, r, R);
  t.l2_dr = lq_range(sdr, grid, 2.0, r, R);
  t.l2_dt = lq_range(sdt, grid, 2.0, r, R);
  return t;
}

}  // namespace nlwlab
