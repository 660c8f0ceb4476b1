#include "nlwlab/solver/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "nlwlab/core/io.hpp"
#include "nlwlab/core/quadrature.hpp"
#include "nlwlab/diagnostics/energy.hpp"

namespace nlwlab {

namespace {

void validate(const SolverConfig& cfg) {
  if (cfg.origin_band < 2) throw std::invalid_argument("SolverConfig: origin_band must be >= 2");
  if (cfg.origin_band > cfg.grid.n()) throw std::invalid_argument("SolverConfig: origin_band exceeds the grid");
  if (cfg.snapshot_stride == 0) throw std::invalid_argument("SolverConfig: snapshot_stride must be >= 1");
  if (!(cfg.blowup_threshold > 0.0)) throw std::invalid_argument("SolverConfig: blowup_threshold must be positive");
}

void require_compatible(const SolverConfig& cfg, const RadialState& s, const char* what) {
  if (!(s.grid() == cfg.grid)) throw std::invalid_argument(std::string(what) + ": state grid differs from the solver grid");
  if (s.params().p != cfg.params.p || s.params().sign != cfg.params.sign) {
    throw std::invalid_argument(std::string(what) + ": state parameters differ from the solver parameters");
  }
}

// Source term and update rule on w, shared by step() and evolve().
class Kernel {
 public:
  explicit Kernel(const SolverConfig& cfg) : cfg_(cfg), n_(cfg.grid.n()), h_(cfg.grid.h()) {
    const double p = cfg.params.p;
    inv_r_pow_.assign(n_ + 1, 0.0);
    for (std::size_t j = cfg.origin_band; j <= n_; ++j) inv_r_pow_[j] = 1.0 / std::pow(cfg.grid.r(j), p - 1.0);
    source_.assign(n_ + 1, 0.0);
  }

  // F = -mu |w|^{p-1} w / r^{p-1}; in the origin band F = -mu r |u|^{p-1} u with u = w/r.
  const std::vector<double>& source(const std::vector<double>& w) {
    if (!cfg_.nonlinear) return source_;
    const double p = cfg_.params.p;
    const double mu = cfg_.params.mu();
    source_[0] = 0.0;
    for (std::size_t j = 1; j < cfg_.origin_band; ++j) {
      const double r = cfg_.grid.r(j);
      source_[j] = -mu * r * signed_power(w[j] / r, p);
    }
    for (std::size_t j = cfg_.origin_band; j <= n_; ++j) source_[j] = -mu * signed_power(w[j], p) * inv_r_pow_[j];
    return source_;
  }

  void advance(const std::vector<double>& prev, const std::vector<double>& curr, std::vector<double>& next) {
    const auto& f = source(curr);
    const double h2 = h_ * h_;
    next[0] = 0.0;
    for (std::size_t j = 1; j < n_; ++j) next[j] = curr[j + 1] + curr[j - 1] - prev[j] + h2 * f[j];
    next[n_] = curr[n_ - 1] - prev[n_] + h2 * f[n_];
  }

  // Second difference with odd reflection at the origin and a zero ghost node.
  std::vector<double> second_difference(const std::vector<double>& w) const {
    std::vector<double> d(n_ + 1, 0.0);
    const double ih2 = 1.0 / (h_ * h_);
    for (std::size_t j = 1; j < n_; ++j) d[j] = (w[j + 1] - 2.0 * w[j] + w[j - 1]) * ih2;
    d[n_] = (-2.0 * w[n_] + w[n_ - 1]) * ih2;
    return d;
  }

  std::vector<double> to_u(const std::vector<double>& w) const { return divide_by_r(w); }

  std::vector<double> divide_by_r(const std::vector<double>& w) const {
    std::vector<double> u(n_ + 1);
    for (std::size_t j = 1; j <= n_; ++j) u[j] = w[j] / cfg_.grid.r(j);
    u[0] = even_extrapolate_origin(u[1], u[2]);
    return u;
  }

  // d_t w by central differences, returned as v = d_t w / r.
  std::vector<double> central_velocity(const std::vector<double>& prev, const std::vector<double>& next) const {
    std::vector<double> dw(n_ + 1);
    for (std::size_t j = 0; j <= n_; ++j) dw[j] = (next[j] - prev[j]) / (2.0 * h_);
    return divide_by_r(dw);
  }

  std::vector<double> backward_velocity(const std::vector<double>& w2, const std::vector<double>& w1,
                                        const std::vector<double>& w0) const {
    std::vector<double> dw(n_ + 1);
    for (std::size_t j = 0; j <= n_; ++j) dw[j] = (3.0 * w0[j] - 4.0 * w1[j] + w2[j]) / (2.0 * h_);
    return divide_by_r(dw);
  }

  // Throws on cone violation or blowup of the freshly computed level.
  void check(const std::vector<double>& w, double t) const {
    double max_u = 0.0;
    bool finite = true;
    for (std::size_t j = 1; j <= n_; ++j) {
      const double u = w[j] / cfg_.grid.r(j);
      if (!std::isfinite(u)) finite = false;
      max_u = std::max(max_u, std::abs(u));
    }
    if (!finite || max_u > cfg_.blowup_threshold) {
      throw EvolutionError(EvolutionError::Kind::Blowup, t,
                           "blowup suspected at t=" + format_double(t) + " (max|u| exceeds " +
                               format_double(cfg_.blowup_threshold) + ")");
    }
    if (cfg_.check_cone) {
      for (std::size_t j = n_ - 1; j <= n_; ++j) {
        if (std::abs(w[j] / cfg_.grid.r(j)) > cfg_.cone_floor) {
          throw EvolutionError(EvolutionError::Kind::ConeViolation, t,
                               "light cone reached the outer boundary at t=" + format_double(t));
        }
      }
    }
  }

 private:
  const SolverConfig& cfg_;
  std::size_t n_;
  double h_;
  std::vector<double> inv_r_pow_;
  std::vector<double> source_;
};

std::size_t step_count(const SolverConfig& cfg, double t0) {
  const double span = (cfg.t_final - t0) / cfg.grid.h();
  const double k = std::round(span);
  if (k < 0.0) throw std::invalid_argument("evolve: t_final precedes the initial time");
  if (std::abs(span - k) > 1e-9 * std::max(1.0, span)) {
    throw std::invalid_argument("evolve: t_final - t0 must be a multiple of the grid spacing");
  }
  return static_cast<std::size_t>(k);
}

}  // namespace

RadialState step(const SolverConfig& cfg, const RadialState& prev, const RadialState& curr) {
  validate(cfg);
  require_compatible(cfg, prev, "step");
  require_compatible(cfg, curr, "step");
  const double h = cfg.grid.h();
  const double dt = curr.t() - prev.t();
  if (std::abs(std::abs(dt) - h) > 1e-9 * h) throw std::invalid_argument("step: states must be one step apart");
  Kernel kernel(cfg);
  const auto wp = prev.w();
  const auto wc = curr.w();
  std::vector<double> wn(wc.size());
  kernel.advance(wp, wc, wn);
  const double t = curr.t() + dt;
  kernel.check(wn, t);
  auto v = kernel.backward_velocity(wp, wc, wn);
  if (dt < 0.0) {
    for (double& x : v) x = -x;
  }
  return RadialState(t, kernel.to_u(wn), std::move(v), cfg.params, cfg.grid);
}

RadialState taylor_back_step(const SolverConfig& cfg, const RadialState& initial) {
  validate(cfg);
  require_compatible(cfg, initial, "taylor_back_step");
  Kernel kernel(cfg);
  const double h = cfg.grid.h();
  const auto w0 = initial.w();
  const auto d2 = kernel.second_difference(w0);
  const auto& f = kernel.source(w0);
  std::vector<double> wm(w0.size(), 0.0);
  for (std::size_t j = 1; j < w0.size(); ++j) {
    const double wt = cfg.grid.r(j) * initial.v()[j];
    wm[j] = w0[j] - h * wt + 0.5 * h * h * (d2[j] + f[j]);
  }
  // Velocity of the synthesised level is not used by the scheme.
  return RadialState(initial.t() - h, kernel.to_u(wm), initial.v(), cfg.params, cfg.grid);
}

Trajectory evolve(const SolverConfig& cfg, const RadialState& initial, const std::optional<RadialState>& initial_prev) {
  validate(cfg);
  require_compatible(cfg, initial, "evolve");
  const double h = cfg.grid.h();
  const double t0 = initial.t();
  const std::size_t steps = step_count(cfg, t0);

  Trajectory traj;
  traj.params = cfg.params;
  traj.grid = cfg.grid;
  traj.nonlinear = cfg.nonlinear;
  traj.stride = cfg.snapshot_stride;

  auto log = [&](const RadialState& s) {
    StepRecord rec;
    rec.t = s.t();
    rec.max_abs_u = s.max_abs_u();
    if (cfg.log_diagnostics) {
      rec.energy = energy(s, cfg.nonlinear);
      rec.virial = virial(s);
      rec.support_radius = support_and_hardy(s).support_radius;
    }
    traj.step_log.push_back(rec);
  };

  if (steps == 0) {
    traj.states.push_back(initial);
    log(initial);
    return traj;
  }

  Kernel kernel(cfg);
  std::vector<double> w_prev;
  if (initial_prev) {
    require_compatible(cfg, *initial_prev, "evolve");
    if (std::abs(initial_prev->t() - (t0 - h)) > 1e-9 * h) {
      throw std::invalid_argument("evolve: initial_prev must precede the initial state by one step");
    }
    w_prev = initial_prev->w();
  } else {
    w_prev = taylor_back_step(cfg, initial).w();
  }
  std::vector<double> w_curr = initial.w();
  std::vector<double> w_next(w_curr.size());
  std::vector<double> w_before(w_curr.size());

  auto fail = [&](const EvolutionError& e) {
    throw EvolutionError(e.kind(), e.time(), e.what(), std::make_shared<const Trajectory>(traj));
  };

  for (std::size_t k = 0; k < steps; ++k) {
    const double t_next = t0 + static_cast<double>(k + 1) * h;
    kernel.advance(w_prev, w_curr, w_next);
    try {
      kernel.check(w_next, t_next);
    } catch (const EvolutionError& e) {
      fail(e);
    }
    const double t_k = t0 + static_cast<double>(k) * h;
    if (k == 0) {
      log(initial);
      traj.states.push_back(initial);
    } else {
      RadialState s(t_k, kernel.to_u(w_curr), kernel.central_velocity(w_prev, w_next), cfg.params, cfg.grid);
      log(s);
      if (k % cfg.snapshot_stride == 0) traj.states.push_back(std::move(s));
    }
    std::swap(w_before, w_prev);
    std::swap(w_prev, w_curr);
    std::swap(w_curr, w_next);
  }

  // One unchecked look-ahead step gives the final level the same central
  // velocity as every other snapshot, so time differences across snapshots
  // stay second order. BDF2 is the fallback when the look-ahead overflows.
  kernel.advance(w_prev, w_curr, w_next);
  const bool ahead_ok = std::all_of(w_next.begin(), w_next.end(), [](double x) { return std::isfinite(x); });
  auto v_last = ahead_ok ? kernel.central_velocity(w_prev, w_next) : kernel.backward_velocity(w_before, w_prev, w_curr);
  RadialState last(t0 + static_cast<double>(steps) * h, kernel.to_u(w_curr), std::move(v_last), cfg.params, cfg.grid);
  log(last);
  if (steps % cfg.snapshot_stride == 0) {
    traj.states.push_back(std::move(last));
  } else {
    traj.final_state = std::move(last);
  }
  return traj;
}

}  // namespace nlwlab
