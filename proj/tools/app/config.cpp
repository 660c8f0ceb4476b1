#include "app/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "nlwlab/core/initial_data.hpp"
#include "nlwlab/core/io.hpp"
#include "nlwlab/core/reference.hpp"

namespace nlwlab::app {

namespace {

using json = nlohmann::json;

std::string join(const std::string& base, const std::string& key) { return base.empty() ? key : base + "." + key; }

// Typed access to one JSON object with the field path carried along.
class Object {
 public:
  Object(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
  }

  void allow(std::initializer_list<const char*> keys) const {
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& [key, value] : j_.items()) {
      if (!ok.count(key)) throw ConfigError(join(path_, key), "unknown field");
    }
  }

  bool has(const char* key) const { return j_.contains(key); }
  std::string path(const char* key) const { return join(path_, key); }

  double number(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }
  double number(const char* key) const {
    const auto& v = at(key);
    if (!v.is_number()) throw ConfigError(path(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path(key), "expected a finite number");
    return x;
  }
  double positive(const char* key, double fallback) const {
    const double x = number(key, fallback);
    if (!(x > 0.0)) throw ConfigError(path(key), "must be positive");
    return x;
  }
  std::size_t count(const char* key, std::size_t fallback, std::size_t minimum = 1) const {
    if (!has(key)) return fallback;
    const auto& v = at(key);
    if (!v.is_number_integer() || v.get<long long>() < static_cast<long long>(minimum)) {
      throw ConfigError(path(key), "expected an integer >= " + std::to_string(minimum));
    }
    return v.get<std::size_t>();
  }
  bool boolean(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    const auto& v = at(key);
    if (!v.is_boolean()) throw ConfigError(path(key), "expected true or false");
    return v.get<bool>();
  }
  std::string string(const char* key) const {
    const auto& v = at(key);
    if (!v.is_string()) throw ConfigError(path(key), "expected a string");
    return v.get<std::string>();
  }
  std::vector<double> numbers(const char* key, std::vector<double> fallback) const {
    if (!has(key)) return fallback;
    const auto& v = at(key);
    if (!v.is_array() || v.empty()) throw ConfigError(path(key), "expected a non-empty array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) throw ConfigError(path(key) + "[" + std::to_string(i) + "]", "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }
  Object child(const char* key) const { return Object(at(key), path(key)); }
  const json& raw() const { return j_; }

 private:
  const json& at(const char* key) const {
    if (!j_.contains(key)) throw ConfigError(path(key), "missing required field");
    return j_.at(key);
  }

  const json& j_;
  std::string path_;
};

InitialData parse_initial(const Object& o) {
  InitialData d;
  const auto kind = o.string("kind");
  if (kind == "W") {
    o.allow({"kind"});
    d.kind = InitialData::Kind::W;
  } else if (kind == "gaussian") {
    o.allow({"kind", "width", "amplitude"});
    d.kind = InitialData::Kind::Gaussian;
    d.width = o.positive("width", 1.0);
    d.amplitude = o.number("amplitude", 1.0);
  } else if (kind == "bump") {
    o.allow({"kind", "radius", "amplitude"});
    d.kind = InitialData::Kind::Bump;
    d.radius = o.positive("radius", 1.0);
    d.amplitude = o.number("amplitude", 1.0);
  } else if (kind == "ode_flat") {
    o.allow({"kind", "amplitude"});
    d.kind = InitialData::Kind::OdeFlat;
    d.amplitude = o.positive("amplitude", 1.0);
  } else if (kind == "file") {
    o.allow({"kind", "path"});
    d.kind = InitialData::Kind::File;
    d.path = o.string("path");
  } else {
    throw ConfigError(o.path("kind"), "expected one of W, gaussian, bump, ode_flat, file");
  }
  return d;
}

std::map<std::string, double> default_checks(const std::string& scenario) {
  if (scenario == "evolve") return {};
  if (scenario == "norms") return {};
  if (scenario == "diagnose") return {{"energy_drift", 1e-3}, {"virial_consistency", 50.0}, {"virial_monotone", 0.0}};
  if (scenario == "bootstrap") return {{"contraction_below_one", 0.0}, {"iteration_converged", 0.0}, {"fixed_point", 0.0}};
  if (scenario == "verify-W")
    return {{"static_drift", 1e-3}, {"drift_order", 1.9}, {"decay_c0", 0.02}, {"decay_slope", 0.05}, {"tail_slope", 0.05}};
  if (scenario == "linear-check") return {{"dalembert_error", 1e-12}};
  return {};
}

const std::set<std::string>& known_checks(const std::string& scenario) {
  static const std::map<std::string, std::set<std::string>> table{
      {"evolve", {"energy_drift", "finite_speed"}},
      {"norms", {"route_agreement", "boundary_decayed"}},
      {"diagnose", {"energy_drift", "virial_consistency", "virial_monotone", "identity_residual"}},
      {"bootstrap", {"contraction_below_one", "iteration_converged", "fixed_point"}},
      {"verify-W", {"static_drift", "drift_order", "decay_c0", "decay_slope", "tail_slope"}},
      {"linear-check", {"dalembert_error"}},
  };
  return table.at(scenario);
}

void parse_checks(const Object& root, ExperimentConfig& cfg) {
  cfg.checks = default_checks(cfg.scenario);
  if (!root.has("checks")) return;
  const auto o = root.child("checks");
  const auto& known = known_checks(cfg.scenario);
  for (const auto& [key, value] : o.raw().items()) {
    const auto path = o.path(key.c_str());
    if (!known.count(key)) throw ConfigError(path, "unknown check for scenario " + cfg.scenario);
    if (value.is_boolean()) {
      if (value.get<bool>()) {
        auto d = default_checks(cfg.scenario);
        cfg.checks[key] = d.count(key) ? d[key] : 0.0;
      } else {
        cfg.checks.erase(key);
      }
    } else if (value.is_number()) {
      cfg.checks[key] = value.get<double>();
    } else {
      throw ConfigError(path, "expected true, false or a tolerance");
    }
  }
}

}  // namespace

const std::vector<std::string>& scenarios() {
  static const std::vector<std::string> names{"evolve", "norms", "diagnose", "bootstrap", "verify-W", "linear-check"};
  return names;
}

EquationParams ExperimentConfig::params() const {
  if (!p) throw ConfigError("p", "missing required field");
  return make_params(*p, mu.value_or(1));
}

RadialGrid ExperimentConfig::grid() const {
  try {
    return RadialGrid::covering(h, R);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("grid", e.what());
  }
}

SolverConfig ExperimentConfig::solver() const {
  SolverConfig s{grid(), params()};
  s.t_final = t_final;
  s.snapshot_stride = snapshot_stride;
  s.origin_band = origin_band;
  s.nonlinear = nonlinear;
  s.check_cone = check_cone;
  s.cone_floor = cone_floor;
  s.blowup_threshold = blowup_threshold;
  return s;
}

RadialState ExperimentConfig::initial_state() const {
  const auto e = params();
  switch (initial.kind) {
    case InitialData::Kind::W:
      return RadialState(0.0, reference_W(grid()).u(), std::vector<double>(grid().size(), 0.0), e, grid());
    case InitialData::Kind::Gaussian:
      return gaussian_state(e, grid(), initial.width, initial.amplitude);
    case InitialData::Kind::Bump:
      return bump_state(e, grid(), initial.radius, initial.amplitude);
    case InitialData::Kind::OdeFlat:
      if (!e.focusing()) throw ConfigError("initial.kind", "ode_flat requires mu = -1");
      return ode_flat_state(e, grid(), initial.amplitude);
    case InitialData::Kind::File: {
      std::ifstream in(initial.path);
      if (!in) throw ConfigError("initial.path", "cannot open " + initial.path);
      auto s = read_state(in);
      if (s.params().p != e.p || s.params().sign != e.sign) throw ConfigError("initial.path", "state file has different p or mu");
      return s;
    }
  }
  throw ConfigError("initial.kind", "unsupported");
}

ExperimentConfig parse_config(const nlohmann::json& doc, const std::string& scenario) {
  if (std::find(scenarios().begin(), scenarios().end(), scenario) == scenarios().end()) {
    throw ConfigError("<scenario>", "unknown scenario " + scenario);
  }
  ExperimentConfig cfg;
  cfg.scenario = scenario;
  cfg.echo = nlohmann::ordered_json::parse(doc.dump());
  const Object root(doc, "");
  root.allow({"p", "mu", "grid", "initial", "t_final", "snapshot_stride", "origin_band", "nonlinear", "solver", "checks",
              "norms", "diagnose", "bootstrap", "verify_W", "linear_check"});

  if (root.has("p")) cfg.p = root.number("p");
  if (root.has("mu")) {
    const double mu = root.number("mu");
    if (mu != 1.0 && mu != -1.0) throw ConfigError("mu", "expected 1 or -1");
    cfg.mu = static_cast<int>(mu);
  }
  if (cfg.p) {
    try {
      (void)make_params(*cfg.p, cfg.mu.value_or(1));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("p", e.what());
    }
  }
  if (root.has("grid")) {
    const auto g = root.child("grid");
    g.allow({"h", "R"});
    cfg.h = g.positive("h", cfg.h);
    cfg.R = g.positive("R", cfg.R);
  }
  if (root.has("initial")) cfg.initial = parse_initial(root.child("initial"));
  cfg.t_final = root.number("t_final", cfg.t_final);
  if (cfg.t_final < 0.0) throw ConfigError("t_final", "must be >= 0");
  cfg.snapshot_stride = root.count("snapshot_stride", cfg.snapshot_stride);
  cfg.origin_band = root.count("origin_band", cfg.origin_band, 2);
  cfg.nonlinear = root.boolean("nonlinear", cfg.nonlinear);
  if (root.has("solver")) {
    const auto s = root.child("solver");
    s.allow({"check_cone", "cone_floor", "blowup_threshold"});
    cfg.check_cone = s.boolean("check_cone", cfg.check_cone);
    cfg.cone_floor = s.positive("cone_floor", cfg.cone_floor);
    cfg.blowup_threshold = s.positive("blowup_threshold", cfg.blowup_threshold);
  }
  parse_checks(root, cfg);

  if (root.has("norms")) {
    const auto o = root.child("norms");
    o.allow({"tail_radii", "g_radii", "evolve"});
    cfg.tail_radii = o.numbers("tail_radii", cfg.tail_radii);
    cfg.g_radii = o.numbers("g_radii", cfg.g_radii);
    cfg.norms_evolve = o.boolean("evolve", cfg.norms_evolve);
  }
  if (root.has("diagnose")) {
    const auto o = root.child("diagnose");
    o.allow({"cutoff_radii"});
    cfg.cutoff_radii = o.numbers("cutoff_radii", cfg.cutoff_radii);
  }
  if (root.has("bootstrap")) {
    const auto o = root.child("bootstrap");
    o.allow({"p", "beta0", "max_iterations", "tol"});
    cfg.sweep_p = o.numbers("p", cfg.sweep_p);
    cfg.beta0 = o.numbers("beta0", cfg.beta0);
    cfg.max_iterations = o.count("max_iterations", cfg.max_iterations);
    cfg.iteration_tol = o.positive("tol", cfg.iteration_tol);
    for (std::size_t i = 0; i < cfg.sweep_p.size(); ++i) {
      if (!(cfg.sweep_p[i] >= 5.0)) throw ConfigError(o.path("p") + "[" + std::to_string(i) + "]", "p must be >= 5");
    }
  }
  if (root.has("verify_W")) {
    const auto o = root.child("verify_W");
    o.allow({"decay_range", "refinement"});
    const auto range = o.numbers("decay_range", {cfg.decay_r_lo, cfg.decay_r_hi});
    if (range.size() != 2 || !(range[0] >= 1.0) || !(range[1] > range[0])) {
      throw ConfigError(o.path("decay_range"), "expected [r_lo, r_hi] with 1 <= r_lo < r_hi");
    }
    cfg.decay_r_lo = range[0];
    cfg.decay_r_hi = range[1];
    cfg.refinement = o.numbers("refinement", cfg.refinement);
  }
  if (root.has("linear_check")) {
    const auto o = root.child("linear_check");
    o.allow({"nodes", "steps"});
    cfg.nodes = o.count("nodes", cfg.nodes, 8);
    cfg.steps = o.count("steps", cfg.steps);
  }

  // Scenario constraints.
  if (scenario == "verify-W") {
    if ((cfg.p && *cfg.p != 5.0) || (cfg.mu && *cfg.mu != -1)) {
      throw ConfigError("p", "scenario verify-W requires p = 5 and mu = -1");
    }
    cfg.p = 5.0;
    cfg.mu = -1;
    cfg.initial.kind = InitialData::Kind::W;
  } else if (scenario != "bootstrap" && scenario != "linear-check") {
    if (!cfg.p) throw ConfigError("p", "missing required field");
    if (!root.has("initial")) throw ConfigError("initial", "missing required field");
  }
  if (scenario == "linear-check") {
    if (!cfg.p) cfg.p = 7.0;
    cfg.nonlinear = false;
  }
  if (scenario == "norms" && cfg.tail_radii.empty() && cfg.g_radii.empty() && !root.has("norms")) {
    cfg.tail_radii = {1.0, 2.0, 4.0};
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path, const std::string& scenario) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc, scenario);
}

}  // namespace nlwlab::app
