#include "nlwlab/bootstrap/decay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nlwlab {

GRecursionReport g_recursion_verify(const Trajectory& traj, double base_radius) {
  const double R = traj.grid.outer_radius();
  std::vector<double> radii;
  for (double r = base_radius; 4.0 * r <= R * (1.0 + 1e-12); r *= 2.0) radii.push_back(r);
  if (radii.size() < 4) throw std::invalid_argument("g_recursion_verify: need at least 4 dyadic windows inside the grid");

  GRecursionReport rep;
  const double p = traj.params.p;
  for (const auto& s : traj.states) {
    const auto gs = g_moduli(s, radii);
    for (std::size_t i = 1; i < gs.size(); ++i) {
      if (gs[i].g1 > gs[i - 1].g1) rep.g1_monotone = false;
    }
  }
  const auto g = g_moduli(traj, radii);
  rep.vacuous = std::all_of(g.begin(), g.end(), [](const GSample& s) { return s.g1 == 0.0; });
  double min2 = std::numeric_limits<double>::infinity();
  double min3 = min2;
  for (const auto& s : g) {
    GRecursionWindow w;
    w.g = s;
    if (s.g1 > 0.0) {
      const double d = std::pow(s.g1, p);
      w.ratio2 = s.g2 / d;
      w.ratio3 = s.g3 / d;
      rep.max_ratio2 = std::max(rep.max_ratio2, w.ratio2);
      rep.max_ratio3 = std::max(rep.max_ratio3, w.ratio3);
      min2 = std::min(min2, w.ratio2);
      min3 = std::min(min3, w.ratio3);
    }
    rep.windows.push_back(w);
  }
  if (!rep.vacuous) {
    rep.spread2 = min2 > 0.0 ? rep.max_ratio2 / min2 : std::numeric_limits<double>::infinity();
    rep.spread3 = min3 > 0.0 ? rep.max_ratio3 / min3 : std::numeric_limits<double>::infinity();
  }
  return rep;
}

DecayFit decay_fit(const Trajectory& traj, double r_lo, double r_hi) {
  if (r_lo < 1.0) throw std::invalid_argument("decay_fit: the fit range must start at r >= 1");
  const auto& grid = traj.grid;
  const auto j_lo = static_cast<std::size_t>(std::ceil(r_lo / grid.h() - 1e-9));
  const auto j_hi = std::min(grid.n(), static_cast<std::size_t>(std::floor(r_hi / grid.h() + 1e-9)));
  if (j_lo > j_hi) throw std::invalid_argument("decay_fit: empty radius range");

  std::vector<const RadialState*> states;
  for (const auto& s : traj.states) states.push_back(&s);
  if (traj.final_state) states.push_back(&*traj.final_state);

  DecayFit fit;
  std::vector<double> sup(j_hi - j_lo + 1, 0.0);
  for (const auto* s : states) {
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
      const double au = std::abs(s->u()[j]);
      sup[j - j_lo] = std::max(sup[j - j_lo], au);
      fit.c0 = std::max(fit.c0, grid.r(j) * au);
    }
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t count = 0;
  for (std::size_t j = j_lo; j <= j_hi; ++j) {
    const double y = sup[j - j_lo];
    if (!(y > 0.0)) continue;
    const double lx = std::log(grid.r(j));
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  fit.samples = count;
  const double denom = static_cast<double>(count) * sxx - sx * sx;
  if (count >= 2 && denom > 0.0) {
    fit.slope = (static_cast<double>(count) * sxy - sx * sy) / denom;
    fit.slope_defined = true;
  } else {
    fit.slope = std::numeric_limits<double>::quiet_NaN();
  }
  return fit;
}

}  // namespace nlwlab
