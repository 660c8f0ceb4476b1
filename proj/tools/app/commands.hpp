#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "app/config.hpp"

namespace nlwlab::app {

/// One pass/fail line of a run. `relation` says how value and limit compare.
struct Check {
  std::string name;
  double value = 0.0;
  double limit = 0.0;
  std::string relation;  // "<=", ">=" or "<"
  bool pass = false;
};

/// Failure raised by a library module while the scenario was running.
struct RunError {
  std::string module;
  std::string message;
  std::optional<double> time;
};

struct RunResult {
  std::vector<Check> checks;
  std::vector<std::string> artifacts;  // file names relative to the output directory
  std::optional<RunError> error;
  bool passed() const;
};

/// Runs a parsed scenario, writing artifacts into `out_dir` (created if
/// needed). Independent pieces of work use up to `threads` workers; results
/// do not depend on the thread count.
RunResult run_scenario(const ExperimentConfig& cfg, const std::filesystem::path& out_dir, unsigned threads = 1);

/// Manifest document: config echo, version, checks, artifacts, error and
/// wall time. Everything except "wall_time_s" is deterministic.
nlohmann::ordered_json make_manifest(const ExperimentConfig& cfg, const RunResult& result, double wall_time_s);

}  // namespace nlwlab::app
