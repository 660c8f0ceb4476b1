#include "nlwlab/norms/report.hpp"

#include <cmath>
#include <numbers>

#include "nlwlab/core/quadrature.hpp"
#include "nlwlab/norms/fourier.hpp"
#include "nlwlab/norms/sobolev.hpp"
#include "nlwlab/norms/spacetime.hpp"

namespace nlwlab {

NormReport make_norm_report(const RadialState& s, std::span<const double> tail_radii, std::span<const double> g_radii) {
  const auto& grid = s.grid();
  const double p = s.params().p;
  NormReport rep;
  rep.t = s.t();
  rep.hsp = sobolev_norm(s.u(), grid, s.params().s_p);
  rep.hsp_minus1 = sobolev_norm(s.v(), grid, s.params().s_p - 1.0);
  rep.boundary_decayed = boundary_tail(s.u()) <= 1e-12 && boundary_tail(s.v()) <= 1e-12;
  const auto ur = radial_derivative_even(s.u(), grid);
  rep.grad_l2 = std::sqrt(l2_norm_squared(ur, grid));
  rep.v_l2 = std::sqrt(l2_norm_squared(s.v(), grid));
  std::vector<double> f(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) f[j] = abs_power(s.u()[j], p + 1.0) * grid.r(j) * grid.r(j);
  rep.u_lp1 = std::pow(4.0 * std::numbers::pi * trapezoid(f, grid.h()), 1.0 / (p + 1.0));
  for (double r : tail_radii) rep.tails.push_back(tail_norms(s, r));
  if (!g_radii.empty()) rep.g = g_moduli(s, g_radii);
  return rep;
}

NormReport make_norm_report(const Trajectory& traj, std::span<const double> tail_radii, std::span<const double> g_radii) {
  auto rep = make_norm_report(traj.states.back(), tail_radii, {});
  if (!g_radii.empty()) rep.g = g_moduli(traj, g_radii);
  if (traj.states.size() >= 8) rep.sp_norm = sp_norm(traj, traj.t_begin(), traj.t_end());
  return rep;
}

nlohmann::ordered_json to_json(const NormReport& rep) {
  nlohmann::ordered_json j;
  j["t"] = rep.t;
  j["hsp"] = rep.hsp;
  j["hsp_minus1"] = rep.hsp_minus1;
  j["energy_norms"] = {{"grad_u_l2", rep.grad_l2}, {"v_l2", rep.v_l2}, {"u_lp1", rep.u_lp1}};
  j["boundary_decayed"] = rep.boundary_decayed;
  auto tails = nlohmann::ordered_json::array();
  for (const auto& t : rep.tails) {
    tails.push_back({{"r", t.r}, {"lm_dr", t.lm_dr}, {"lm_dt", t.lm_dt}, {"l2_dr", t.l2_dr}, {"l2_dt", t.l2_dt}});
  }
  j["tails"] = tails;
  auto g = nlohmann::ordered_json::array();
  for (const auto& s : rep.g) g.push_back({{"r", s.r}, {"g1", s.g1}, {"g2", s.g2}, {"g3", s.g3}});
  j["g"] = g;
  j["sp_norm"] = rep.sp_norm ? nlohmann::ordered_json(*rep.sp_norm) : nlohmann::ordered_json(nullptr);
  return j;
}

}  // namespace nlwlab
