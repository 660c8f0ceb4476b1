#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "nlwlab/core/trajectory.hpp"

namespace nlwlab {

/// Settings of one evolution. The time step always equals the grid spacing.
struct SolverConfig {
  RadialGrid grid;
  EquationParams params;
  double t_final = 0.0;               // end time; (t_final - t_initial) must be a multiple of h
  std::size_t snapshot_stride = 1;    // solver steps between stored snapshots
  std::size_t origin_band = 2;        // nodes 1..band-1 evaluate the source in u-form
  bool nonlinear = true;              // false drops the mu-term entirely
  bool check_cone = true;             // signal data reaching the outermost two nodes
  double cone_floor = 1e-13;
  double blowup_threshold = 1e12;     // on max |u|
  bool log_diagnostics = true;        // energy/virial per step
};

/// Failure of a step, carrying the time at which it was detected. Errors
/// thrown by evolve() also carry the trajectory computed up to that point.
class EvolutionError : public std::runtime_error {
 public:
  enum class Kind { ConeViolation, Blowup };

  EvolutionError(Kind kind, double t, const std::string& what,
                 std::shared_ptr<const Trajectory> partial = nullptr)
      : std::runtime_error(what), kind_(kind), t_(t), partial_(std::move(partial)) {}

  Kind kind() const { return kind_; }
  double time() const { return t_; }
  const Trajectory* partial() const { return partial_.get(); }

 private:
  Kind kind_;
  double t_;
  std::shared_ptr<const Trajectory> partial_;
};

/// One CFL = 1 step of w_tt - w_rr = -mu r |u|^{p-1} u, w = r u:
///   w_j^{n+1} = w_{j+1}^n + w_{j-1}^n - w_j^{n-1} + h^2 F_j^n.
/// `prev` and `curr` must be one step apart on the same grid; swapping them
/// steps backwards. The velocity of the result is the second-order backward
/// difference of w.
RadialState step(const SolverConfig& config, const RadialState& prev, const RadialState& curr);

/// Evolves to config.t_final. Without `initial_prev` the back-step is
/// synthesised by the Taylor start w^{-1} = w^0 - h w_t + h^2/2 (w_rr + F).
/// Snapshots after the first carry the central-difference velocity; for the
/// final level it uses one extra, unstored step.
Trajectory evolve(const SolverConfig& config, const RadialState& initial,
                  const std::optional<RadialState>& initial_prev = std::nullopt);

/// The Taylor back-step used by evolve().
RadialState taylor_back_step(const SolverConfig& config, const RadialState& initial);

}  // namespace nlwlab
