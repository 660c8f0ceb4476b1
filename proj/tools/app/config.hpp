#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "nlwlab/core/params.hpp"
#include "nlwlab/core/state.hpp"
#include "nlwlab/solver/solver.hpp"

namespace nlwlab::app {

/// Malformed configuration, located by a dotted field path such as "grid.h".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct InitialData {
  enum class Kind { W, Gaussian, Bump, OdeFlat, File };
  Kind kind = Kind::Gaussian;
  double width = 1.0;
  double radius = 1.0;
  double amplitude = 1.0;
  std::string path;
};

struct ExperimentConfig {
  std::string scenario;
  nlohmann::ordered_json echo;  // the parsed document, written back to the manifest

  std::optional<double> p;
  std::optional<int> mu;
  double h = 0.01;
  double R = 20.0;
  InitialData initial;
  double t_final = 1.0;
  std::size_t snapshot_stride = 1;
  std::size_t origin_band = 2;
  bool nonlinear = true;
  bool check_cone = true;
  double cone_floor = 1e-13;
  double blowup_threshold = 1e12;

  /// Enabled checks with their tolerances; a check absent from the map is off.
  std::map<std::string, double> checks;

  // norms
  std::vector<double> tail_radii;
  std::vector<double> g_radii;
  bool norms_evolve = false;
  // diagnose
  std::vector<double> cutoff_radii{1.5};
  // bootstrap
  std::vector<double> sweep_p{5.0, 6.0, 7.0, 9.0, 13.0};
  std::vector<double> beta0{0.01, 0.1};
  std::size_t max_iterations = 100000;
  double iteration_tol = 1e-12;
  // verify-W
  double decay_r_lo = 4.0;
  double decay_r_hi = 12.5;
  std::vector<double> refinement{0.02, 0.01, 0.005};
  // linear-check
  std::size_t nodes = 2048;
  std::size_t steps = 2000;

  EquationParams params() const;
  RadialGrid grid() const;
  SolverConfig solver() const;
  RadialState initial_state() const;
};

/// Names accepted as subcommands.
const std::vector<std::string>& scenarios();

/// Parses and validates a configuration document for `scenario`; applies the
/// scenario defaults and constraints (verify-W is pinned to p = 5, mu = -1).
ExperimentConfig parse_config(const nlohmann::json& doc, const std::string& scenario);
ExperimentConfig load_config(const std::string& path, const std::string& scenario);

}  // namespace nlwlab::app
