#include "app/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>

#include "app/parallel.hpp"
#include "nlwlab/bootstrap/decay.hpp"
#include "nlwlab/bootstrap/exponents.hpp"
#include "nlwlab/core/io.hpp"
#include "nlwlab/core/reference.hpp"
#include "nlwlab/diagnostics/energy.hpp"
#include "nlwlab/diagnostics/identities.hpp"
#include "nlwlab/norms/report.hpp"
#include "nlwlab/norms/sobolev.hpp"
#include "nlwlab/solver/solver.hpp"

#ifndef NLWLAB_VERSION
#define NLWLAB_VERSION "unknown"
#endif

namespace nlwlab::app {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

Check le(std::string name, double value, double limit) { return {std::move(name), value, limit, "<=", value <= limit}; }
Check ge(std::string name, double value, double limit) { return {std::move(name), value, limit, ">=", value >= limit}; }
Check lt(std::string name, double value, double limit) { return {std::move(name), value, limit, "<", value < limit}; }

class Artifacts {
 public:
  Artifacts(fs::path dir, RunResult& result) : dir_(std::move(dir)), result_(result) {}

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    std::ofstream os(dir_ / name, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + (dir_ / name).string());
    body(os);
    result_.artifacts.push_back(name);
  }
  void json(const std::string& name, const ordered_json& doc) {
    write(name, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
  }

 private:
  fs::path dir_;
  RunResult& result_;
};

bool enabled(const ExperimentConfig& cfg, const char* name) { return cfg.checks.count(name) > 0; }
double limit(const ExperimentConfig& cfg, const char* name) { return cfg.checks.at(name); }

double energy_drift(const std::vector<StepRecord>& log) {
  const double e0 = log.front().energy;
  double worst = 0.0;
  for (const auto& r : log) worst = std::max(worst, std::abs(r.energy - e0));
  return worst / std::max(std::abs(e0), 1e-14);
}

std::vector<RadialState> all_states(const Trajectory& traj) {
  auto out = traj.states;
  if (traj.final_state) out.push_back(*traj.final_state);
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> geometric(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / static_cast<double>(count - 1));
  return out;
}

// ---------------------------------------------------------------- evolve

void run_evolve(const ExperimentConfig& cfg, Artifacts& art, RunResult& res) {
  const auto traj = evolve(cfg.solver(), cfg.initial_state());
  art.write("trajectory.txt", [&](std::ostream& os) { write_states(os, all_states(traj)); });
  art.write("step_log.csv", [&](std::ostream& os) { write_step_log_csv(os, traj.step_log); });
  if (enabled(cfg, "energy_drift")) res.checks.push_back(le("energy_drift", energy_drift(traj.step_log), limit(cfg, "energy_drift")));
  if (enabled(cfg, "finite_speed")) {
    // Excess of the support over the light cone of the initial support.
    const double rho = traj.step_log.front().support_radius;
    double excess = -std::numeric_limits<double>::infinity();
    for (const auto& r : traj.step_log) excess = std::max(excess, r.support_radius - (rho + (r.t - traj.t_begin()) + 2.0 * cfg.h));
    res.checks.push_back(le("finite_speed", excess, limit(cfg, "finite_speed")));
  }
}

// ---------------------------------------------------------------- norms

void run_norms(const ExperimentConfig& cfg, Artifacts& art, RunResult& res) {
  NormReport rep;
  std::optional<RadialState> last;
  if (cfg.norms_evolve) {
    const auto traj = evolve(cfg.solver(), cfg.initial_state());
    rep = make_norm_report(traj, cfg.tail_radii, cfg.g_radii);
    last = traj.states.back();
  } else {
    last = cfg.initial_state();
    rep = make_norm_report(*last, cfg.tail_radii, cfg.g_radii);
  }
  art.json("norms.json", to_json(rep));
  art.write("tails.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"r", "lm_dr", "lm_dt", "l2_dr", "l2_dt"});
    for (const auto& t : rep.tails) csv.row({t.r, t.lm_dr, t.lm_dt, t.l2_dr, t.l2_dt});
  });
  art.write("g.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"r", "g1", "g2", "g3"});
    for (const auto& g : rep.g) csv.row({g.r, g.g1, g.g2, g.g3});
  });
  if (enabled(cfg, "route_agreement")) {
    const double sp = last->params().s_p;
    const double a = sobolev_norm_squared(last->u(), last->grid(), sp);
    const double b = sobolev_norm_squared_1d(last->u(), last->grid(), sp);
    const double rel = a > 0.0 ? std::abs(a - b) / a : std::abs(b);
    res.checks.push_back(le("route_agreement", rel, limit(cfg, "route_agreement")));
  }
  if (enabled(cfg, "boundary_decayed")) {
    res.checks.push_back(le("boundary_decayed", rep.boundary_decayed ? 0.0 : 1.0, 0.0));
  }
}

// ---------------------------------------------------------------- diagnose

void run_diagnose(const ExperimentConfig& cfg, Artifacts& art, RunResult& res, unsigned threads) {
  const auto traj = evolve(cfg.solver(), cfg.initial_state());
  std::vector<std::vector<DiagnosticRecord>> records(cfg.cutoff_radii.size());
  parallel_for(records.size(), threads, [&](std::size_t i) { records[i] = diagnose(traj, cfg.cutoff_radii[i]); });

  art.write("diagnostics.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"t", "E", "E_coercive", "z", "z_rate_lhs", "z_rate_rhs", "res_i", "res_ii", "res_iii",
                       "support_radius", "hardy"});
    for (const auto& r : records.front()) {
      csv.row({r.t, r.energy, r.energy_coercive ? 1.0 : 0.0, r.virial, r.virial_rate_lhs, r.virial_rate_rhs,
               r.identity_residuals[0], r.identity_residuals[1], r.identity_residuals[2], r.support_radius,
               r.hardy_value});
    }
  });
  art.write("step_log.csv", [&](std::ostream& os) { write_step_log_csv(os, traj.step_log); });
  ordered_json sweep = ordered_json::array();
  double worst_identity = 0.0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& r : records[i]) {
      sweep.push_back({{"Rc", cfg.cutoff_radii[i]}, {"t", r.t}, {"residuals", r.identity_residuals}});
      for (double x : r.identity_residuals) worst_identity = std::max(worst_identity, x);
    }
  }
  art.json("identities.json", sweep);

  if (enabled(cfg, "energy_drift")) res.checks.push_back(le("energy_drift", energy_drift(traj.step_log), limit(cfg, "energy_drift")));
  if (enabled(cfg, "virial_consistency")) {
    // |dz/dt - z'| / (dt^2 max|z'|) against the pinned constant.
    double worst = 0.0, scale = 0.0;
    for (const auto& r : records.front()) {
      worst = std::max(worst, std::abs(r.virial_rate_lhs - r.virial_rate_rhs));
      scale = std::max(scale, std::abs(r.virial_rate_rhs));
    }
    const double dt = traj.snapshot_dt();
    const double c = scale > 0.0 ? worst / (dt * dt * scale) : 0.0;
    res.checks.push_back(le("virial_consistency", c, limit(cfg, "virial_consistency")));
  }
  if (enabled(cfg, "virial_monotone")) {
    double worst_increase = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < traj.step_log.size(); ++k)
      worst_increase = std::max(worst_increase, traj.step_log[k].virial - traj.step_log[k - 1].virial);
    res.checks.push_back(lt("virial_monotone", worst_increase, limit(cfg, "virial_monotone")));
  }
  if (enabled(cfg, "identity_residual")) res.checks.push_back(le("identity_residual", worst_identity, limit(cfg, "identity_residual")));
}

// ---------------------------------------------------------------- bootstrap

Precision precision_from_env() {
  const char* v = std::getenv("NLWLAB_PRECISION");
  if (!v || std::string(v) == "f64") return Precision::Double;
  if (std::string(v) == "extended") return Precision::Extended;
  throw ConfigError("NLWLAB_PRECISION", "expected f64 or extended");
}

void run_bootstrap(const ExperimentConfig& cfg, Artifacts& art, RunResult& res, unsigned threads) {
  const auto precision = precision_from_env();
  struct PRow {
    ContractionConstant contraction;
    double gamma_fixed = 0.0;
    double fixed_ulps = 0.0;
    std::vector<ExponentSequence> sequences;
  };
  std::vector<PRow> rows(cfg.sweep_p.size());
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const double p = cfg.sweep_p[i];
    const double limit_beta = 1.0 - 2.0 / (p - 1.0);
    auto& row = rows[i];
    row.contraction = contraction_constant(p);
    row.gamma_fixed = bootstrap_step(p, limit_beta).gamma;
    const double ulp = std::nextafter(1.0 / p, 1.0) - 1.0 / p;
    row.fixed_ulps = std::abs(row.gamma_fixed - 1.0 / p) / ulp;
    for (double b : cfg.beta0) {
      if (!(b > 0.0 && b < limit_beta)) continue;
      row.sequences.push_back(exponent_iteration(p, b, cfg.max_iterations, cfg.iteration_tol, precision));
    }
  });

  art.write("contraction.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"p", "a", "contraction", "theta", "beta_limit", "gamma_at_limit"});
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double p = cfg.sweep_p[i];
      csv.row({p, 2.0 / (p - 1.0), rows[i].contraction.value, rows[i].contraction.theta, 1.0 - 2.0 / (p - 1.0),
               rows[i].gamma_fixed});
    }
  });
  art.write("exponents.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"p", "beta0", "n", "beta", "gamma"});
    for (const auto& row : rows) {
      for (const auto& seq : row.sequences) {
        for (std::size_t n = 0; n < seq.beta.size(); ++n) {
          const double g = n < seq.gamma.size() ? seq.gamma[n] : std::nan("");
          csv.row({seq.p, seq.beta.front(), static_cast<double>(n), seq.beta[n], g});
        }
      }
    }
  });

  double max_contraction = 0.0, max_gap = 0.0, max_ulps = 0.0;
  bool all_converged = true;
  for (const auto& row : rows) {
    max_contraction = std::max(max_contraction, row.contraction.value);
    max_ulps = std::max(max_ulps, row.fixed_ulps);
    for (const auto& seq : row.sequences) {
      all_converged = all_converged && seq.converged;
      max_gap = std::max(max_gap, seq.limit_gap);
    }
  }
  if (enabled(cfg, "contraction_below_one")) res.checks.push_back(lt("contraction_below_one", max_contraction, 1.0));
  if (enabled(cfg, "iteration_converged")) {
    res.checks.push_back({"iteration_converged", max_gap, cfg.iteration_tol, "<", all_converged});
  }
  if (enabled(cfg, "fixed_point")) res.checks.push_back(le("fixed_point", max_ulps, 1.0));
}

// ---------------------------------------------------------------- verify-W

struct WRun {
  double h = 0.0;
  double drift = 0.0;
  std::optional<Trajectory> traj;
};

WRun static_w_run(const ExperimentConfig& cfg, double h, bool keep) {
  const auto grid = RadialGrid::covering(h, cfg.R);
  SolverConfig s{grid, make_params(5.0, Sign::Focusing)};
  s.t_final = cfg.t_final;
  s.snapshot_stride = cfg.snapshot_stride;
  s.origin_band = cfg.origin_band;
  // W does not decay; the outer boundary is excluded from the comparison instead.
  s.check_cone = false;
  s.blowup_threshold = cfg.blowup_threshold;
  s.log_diagnostics = false;
  auto traj = evolve(s, reference_W(grid));
  WRun run{h, 0.0, std::nullopt};
  for (const auto& st : all_states(traj)) {
    const double reach = grid.outer_radius() - (st.t() - traj.t_begin()) - 2.0 * h;
    for (std::size_t j = 0; j < grid.size() && grid.r(j) <= reach; ++j)
      run.drift = std::max(run.drift, std::abs(st.u()[j] - ground_state_W(grid.r(j))));
  }
  if (keep) run.traj = std::move(traj);
  return run;
}

double w_tail_slope(double h, double R, double lo, double hi) {
  const auto W = reference_W(RadialGrid::covering(h, R));
  const auto radii = geometric(lo, hi, 24);
  std::vector<double> tails;
  for (double r : radii) tails.push_back(tail_norms(W, r).l2_dr);
  return loglog_slope(radii, tails);
}

void run_verify_w(const ExperimentConfig& cfg, Artifacts& art, RunResult& res, unsigned threads) {
  std::vector<double> hs = cfg.refinement;
  if (std::find(hs.begin(), hs.end(), cfg.h) == hs.end()) hs.push_back(cfg.h);
  std::vector<WRun> runs(hs.size());
  parallel_for(hs.size(), threads, [&](std::size_t i) { runs[i] = static_w_run(cfg, hs[i], hs[i] == cfg.h); });
  const auto main_run = std::find_if(runs.begin(), runs.end(), [&](const WRun& r) { return r.h == cfg.h; });

  double min_order = std::numeric_limits<double>::infinity();
  ordered_json drift_table = ordered_json::array();
  for (std::size_t i = 0; i < cfg.refinement.size(); ++i) {
    drift_table.push_back({{"h", runs[i].h}, {"drift", runs[i].drift}});
    if (i > 0) min_order = std::min(min_order, std::log(runs[i - 1].drift / runs[i].drift) / std::log(runs[i - 1].h / runs[i].h));
  }
  const auto fit = decay_fit(*main_run->traj, cfg.decay_r_lo, cfg.decay_r_hi);
  const double c0_rel = std::abs(fit.c0 / std::sqrt(3.0) - 1.0);
  const double tail_hi = cfg.R / 4.0;
  const double tail_slope = w_tail_slope(cfg.h, cfg.R, cfg.decay_r_lo, tail_hi);
  const double tail_slope_2r = w_tail_slope(cfg.h, 2.0 * cfg.R, cfg.decay_r_lo, tail_hi);

  art.write("drift.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"h", "drift"});
    for (const auto& r : runs) csv.row({r.h, r.drift});
  });
  art.write("decay.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"r", "sup_t_abs_u", "r_sup_t_abs_u"});
    const auto& traj = *main_run->traj;
    const auto states = all_states(traj);
    for (std::size_t j = 0; j < traj.grid.size(); ++j) {
      const double r = traj.grid.r(j);
      if (r < cfg.decay_r_lo || r > cfg.decay_r_hi) continue;
      double sup = 0.0;
      for (const auto& st : states) sup = std::max(sup, std::abs(st.u()[j]));
      csv.row({r, sup, r * sup});
    }
  });
  art.json("verify_W.json", ordered_json{
      {"h", cfg.h},
      {"R", cfg.R},
      {"t_final", cfg.t_final},
      {"drift", main_run->drift},
      {"refinement", drift_table},
      {"min_order", min_order},
      {"decay", {{"r_lo", cfg.decay_r_lo}, {"r_hi", cfg.decay_r_hi}, {"c0", fit.c0}, {"c0_over_sqrt3", fit.c0 / std::sqrt(3.0)},
                 {"slope", fit.slope}, {"samples", fit.samples}}},
      {"tail", {{"r_lo", cfg.decay_r_lo}, {"r_hi", tail_hi}, {"l2_slope", tail_slope}, {"l2_slope_at_2R", tail_slope_2r}}},
  });

  if (enabled(cfg, "static_drift")) res.checks.push_back(le("static_drift", main_run->drift, limit(cfg, "static_drift")));
  if (enabled(cfg, "drift_order") && cfg.refinement.size() >= 2) res.checks.push_back(ge("drift_order", min_order, limit(cfg, "drift_order")));
  if (enabled(cfg, "decay_c0")) res.checks.push_back(le("decay_c0", c0_rel, limit(cfg, "decay_c0")));
  if (enabled(cfg, "decay_slope")) res.checks.push_back(le("decay_slope", std::abs(fit.slope + 1.0), limit(cfg, "decay_slope")));
  if (enabled(cfg, "tail_slope")) res.checks.push_back(le("tail_slope", std::abs(tail_slope + 0.5), limit(cfg, "tail_slope")));
}

// ---------------------------------------------------------------- linear-check

double hat(double x, double c, double half) { return std::max(0.0, 1.0 - std::abs(x - c) / half); }
double odd_hat(double x, double c, double half) { return x >= 0.0 ? hat(x, c, half) : -hat(-x, c, half); }

void run_linear_check(const ExperimentConfig& cfg, Artifacts& art, RunResult& res) {
  const RadialGrid grid(cfg.h, cfg.nodes);
  const auto params = cfg.params();
  // A hat close to the origin so its cone stays inside the grid for all steps.
  const double room = grid.outer_radius() - static_cast<double>(cfg.steps) * cfg.h;
  if (!(room > 4.0 * cfg.h)) throw ConfigError("linear_check.steps", "the light cone leaves the grid; use fewer steps");
  const double half = std::floor(room / 3.0 / cfg.h) * cfg.h;
  const double centre = std::floor(room / 2.0 / cfg.h) * cfg.h;
  std::vector<double> u(grid.size()), v(grid.size(), 0.0);
  for (std::size_t j = 1; j < grid.size(); ++j) u[j] = hat(grid.r(j), centre, half) / grid.r(j);
  u[0] = even_extrapolate_origin(u[1], u[2]);
  const RadialState initial(0.0, std::move(u), std::move(v), params, grid);

  SolverConfig s{grid, params};
  s.t_final = static_cast<double>(cfg.steps) * cfg.h;
  s.snapshot_stride = cfg.snapshot_stride;
  s.nonlinear = false;
  s.log_diagnostics = false;
  const auto traj = evolve(s, initial);

  double worst = 0.0;
  art.write("linear_check.csv", [&](std::ostream& os) {
    CsvWriter csv(os, {"t", "max_error"});
    for (const auto& st : all_states(traj)) {
      const auto w = st.w();
      double e = 0.0;
      for (std::size_t j = 0; j < grid.size(); ++j) {
        const double r = grid.r(j), t = st.t();
        e = std::max(e, std::abs(w[j] - 0.5 * (odd_hat(r + t, centre, half) + odd_hat(r - t, centre, half))));
      }
      worst = std::max(worst, e);
      csv.row({st.t(), e});
    }
  });
  if (enabled(cfg, "dalembert_error")) res.checks.push_back(le("dalembert_error", worst, limit(cfg, "dalembert_error")));
}

}  // namespace

bool RunResult::passed() const {
  if (error) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

RunResult run_scenario(const ExperimentConfig& cfg, const fs::path& out_dir, unsigned threads) {
  fs::create_directories(out_dir);
  RunResult res;
  Artifacts art(out_dir, res);
  try {
    if (cfg.scenario == "evolve") run_evolve(cfg, art, res);
    else if (cfg.scenario == "norms") run_norms(cfg, art, res);
    else if (cfg.scenario == "diagnose") run_diagnose(cfg, art, res, threads);
    else if (cfg.scenario == "bootstrap") run_bootstrap(cfg, art, res, threads);
    else if (cfg.scenario == "verify-W") run_verify_w(cfg, art, res, threads);
    else if (cfg.scenario == "linear-check") run_linear_check(cfg, art, res);
    else throw ConfigError("<scenario>", "unknown scenario " + cfg.scenario);
  } catch (const EvolutionError& e) {
    res.error = RunError{"solver", e.what(), e.time()};
    if (e.partial()) {
      art.write("partial_step_log.csv", [&](std::ostream& os) { write_step_log_csv(os, e.partial()->step_log); });
    }
  }
  return res;
}

ordered_json make_manifest(const ExperimentConfig& cfg, const RunResult& result, double wall_time_s) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : result.checks) {
    checks.push_back({{"name", c.name}, {"value", c.value}, {"relation", c.relation}, {"limit", c.limit}, {"pass", c.pass}});
  }
  ordered_json m;
  m["nlwlab_version"] = NLWLAB_VERSION;
  m["scenario"] = cfg.scenario;
  m["config"] = cfg.echo;
  m["checks"] = checks;
  m["passed"] = result.passed();
  m["artifacts"] = result.artifacts;
  if (result.error) {
    ordered_json err{{"module", result.error->module}, {"message", result.error->message}};
    if (result.error->time) err["time"] = *result.error->time;
    m["error"] = err;
  }
  m["wall_time_s"] = wall_time_s;
  return m;
}

}  // namespace nlwlab::app
