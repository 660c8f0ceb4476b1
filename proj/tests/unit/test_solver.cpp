#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "nlwlab/core/initial_data.hpp"
#include "nlwlab/core/reference.hpp"
#include "nlwlab/solver/characteristics.hpp"
#include "nlwlab/solver/representation.hpp"
#include "nlwlab/solver/solver.hpp"

using namespace nlwlab;
using nlwlab::test::max_abs_diff;

namespace {

// Odd extension of a hat of half-width `half` centred at `c`.
double hat(double r, double c, double half) { return std::max(0.0, 1.0 - std::abs(r - c) / half); }
double odd_hat(double r, double c, double half) { return r >= 0 ? hat(r, c, half) : -hat(-r, c, half); }

SolverConfig config_for(const RadialGrid& g, const EquationParams& p, double t_final) {
  SolverConfig cfg{g, p};
  cfg.t_final = t_final;
  return cfg;
}

double w_error_vs_W(double h, double t_final) {
  const auto g = RadialGrid::covering(h, 8.0);
  auto cfg = config_for(g, make_params(5.0, Sign::Focusing), t_final);
  cfg.check_cone = false;
  cfg.log_diagnostics = false;
  const auto traj = evolve(cfg, reference_W(g));
  const auto& last = traj.last();
  double worst = 0.0;
  // Nodes not yet reached by the reflection of the truncated outer boundary.
  for (std::size_t j = 0; g.r(j) <= g.outer_radius() - t_final - 2 * h; ++j)
    worst = std::max(worst, std::abs(last.u()[j] - ground_state_W(g.r(j))));
  return worst;
}

}  // namespace

TEST_CASE("linear exactness against d'Alembert") {
  const auto params = make_params(7.0, 1);
  for (double h : {0.1, 0.05, 1.0 / 64}) {
    const auto g = RadialGrid::covering(h, 12.0);
    const double c = 3.0, half = 1.0;
    const auto s0 = test::state_from_w(params, g, 0.0, [&](double r) { return hat(r, c, half); });
    auto cfg = config_for(g, params, 6.0);
    cfg.nonlinear = false;
    const auto traj = evolve(cfg, s0);
    for (std::size_t k = 0; k < traj.states.size(); k += 7) {
      const auto& s = traj.states[k];
      const auto w = s.w();
      double worst = 0.0;
      for (std::size_t j = 0; j < g.size(); ++j) {
        const double r = g.r(j), t = s.t();
        worst = std::max(worst, std::abs(w[j] - 0.5 * (odd_hat(r + t, c, half) + odd_hat(r - t, c, half))));
      }
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("t_final equal to the start keeps only the initial state") {
  const auto g = RadialGrid(0.1, 100);
  const auto params = make_params(7.0, 1);
  const auto s0 = gaussian_state(params, g, 1.0, 1.0);
  const auto traj = evolve(config_for(g, params, 0.0), s0);
  REQUIRE(traj.states.size() == 1);
  CHECK(traj.states[0].u() == s0.u());
  CHECK_FALSE(traj.final_state.has_value());
}

TEST_CASE("zero data stays zero") {
  const auto g = RadialGrid(0.05, 200);
  const auto params = make_params(5.0, Sign::Focusing);
  const auto traj = evolve(config_for(g, params, 3.0), RadialState::zero(0.0, params, g));
  for (const auto& s : traj.states) {
    CHECK(s.max_abs_u() == 0.0);
    for (double v : s.v()) CHECK(v == 0.0);
  }
}

TEST_CASE("stepping is time reversible") {
  const auto g = RadialGrid::covering(0.02, 10.0);
  const auto params = make_params(7.0, Sign::Focusing);
  const auto cfg = config_for(g, params, 0.0);
  const auto s0 = gaussian_state(params, g, 0.7, 0.8);
  RadialState prev = taylor_back_step(cfg, s0), curr = s0;
  const RadialState first_prev = prev;
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    auto next = step(cfg, prev, curr);
    prev = std::move(curr);
    curr = std::move(next);
  }
  std::swap(prev, curr);
  for (int i = 0; i < n; ++i) {
    auto next = step(cfg, prev, curr);
    prev = std::move(curr);
    curr = std::move(next);
  }
  // Now curr holds level -1 and prev holds level 0. The scheme advances w;
  // u at the origin of a stepped level is the even extrapolation.
  CHECK(max_abs_diff(prev.w(), s0.w()) <= 1e-10);
  CHECK(max_abs_diff(curr.w(), first_prev.w()) <= 1e-10);
}

TEST_CASE("static W converges at second order") {
  const double e1 = w_error_vs_W(0.04, 1.0), e2 = w_error_vs_W(0.02, 1.0), e3 = w_error_vs_W(0.01, 1.0);
  MESSAGE("W drift: " << e1 << " " << e2 << " " << e3);
  CHECK(e1 < 1e-3);
  CHECK(test::order(e1, e2) >= 1.9);
  CHECK(test::order(e2, e3) >= 1.9);
}

TEST_CASE("flat focusing data follows the ODE blowup") {
  const auto params = make_params(5.0, Sign::Focusing);
  const double amplitude = 1.0;
  const double T = ode_blowup_time(params, amplitude);
  auto run = [&](double h, double t_probe) {
    const auto g = RadialGrid::covering(h, std::ceil(T) + 2.0);
    auto cfg = config_for(g, params, t_probe);
    cfg.check_cone = false;
    cfg.log_diagnostics = false;
    const auto traj = evolve(cfg, ode_flat_state(params, g, amplitude));
    return traj;
  };

  SUBCASE("one percent until ten steps before blowup") {
    const double h = 1.0 / 256;
    const double t_stop = std::floor((T - 10 * h) / h) * h;
    const auto traj = run(h, t_stop);
    double worst = 0.0;
    for (const auto& s : traj.states) {
      const double exact = reference_ode_blowup(params, T, s.t());
      worst = std::max(worst, std::abs(s.u()[0] - exact) / exact);
    }
    MESSAGE("T = " << T << ", worst relative deviation " << worst);
    CHECK(worst <= 0.01);
  }
  SUBCASE("second order at a fixed time") {
    const double t_probe = 0.5;
    double err[3];
    double h = 1.0 / 32;
    for (double& e : err) {
      const auto traj = run(h, t_probe);
      e = std::abs(traj.last().u()[0] - reference_ode_blowup(params, T, t_probe));
      h /= 2;
    }
    CHECK(test::order(err[0], err[1]) >= 1.9);
    CHECK(test::order(err[1], err[2]) >= 1.9);
  }
}

TEST_CASE("finite speed of propagation") {
  const auto g = RadialGrid::covering(0.02, 10.0);
  const auto params = make_params(7.0, Sign::Defocusing);
  auto cfg = config_for(g, params, 5.0);
  cfg.snapshot_stride = 5;
  const auto traj = evolve(cfg, bump_state(params, g, 1.0, 2.0));
  for (const auto& s : traj.states) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g.r(j) > 1.0 + s.t() + 2 * g.h()) {
        CHECK(std::abs(s.u()[j]) <= 1e-12);
        CHECK(std::abs(s.v()[j]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("evolution errors") {
  const auto params = make_params(5.0, Sign::Focusing);
  SUBCASE("cone violation reports the time and the partial trajectory") {
    const auto g = RadialGrid::covering(0.05, 4.0);
    auto cfg = config_for(g, params, 5.0);
    try {
      evolve(cfg, bump_state(params, g, 1.0, 0.1));
      FAIL("expected a cone violation");
    } catch (const EvolutionError& e) {
      CHECK(e.kind() == EvolutionError::Kind::ConeViolation);
      CHECK(e.time() > 1.5);
      CHECK(e.time() < 3.1);
      REQUIRE(e.partial() != nullptr);
      CHECK(e.partial()->states.size() > 1);
    }
  }
  SUBCASE("blowup is detected") {
    const auto g = RadialGrid::covering(0.01, 4.0);
    auto cfg = config_for(g, params, 1.5);
    cfg.check_cone = false;
    try {
      evolve(cfg, ode_flat_state(params, g, 1.0));
      FAIL("expected blowup");
    } catch (const EvolutionError& e) {
      CHECK(e.kind() == EvolutionError::Kind::Blowup);
      CHECK(e.time() <= ode_blowup_time(params, 1.0) + 0.05);
    }
  }
  SUBCASE("end time off the step lattice") {
    const auto g = RadialGrid::covering(0.1, 4.0);
    CHECK_THROWS_AS(evolve(config_for(g, params, 0.55), RadialState::zero(0.0, params, g)), std::invalid_argument);
  }
}

TEST_CASE("representation formula residual") {
  SUBCASE("exact for linear evolution") {
    const auto g = RadialGrid::covering(0.02, 12.0);
    const auto params = make_params(7.0, 1);
    auto cfg = config_for(g, params, 4.0);
    cfg.nonlinear = false;
    const auto traj = evolve(cfg, gaussian_state(params, g, 0.8, 1.0));
    CHECK(representation_residual(traj, 4.0, 2.0, 2.0) <= 1e-10);
    CHECK(representation_residual(traj, 5.0, 3.0, 3.0) <= 1e-10);
  }
  SUBCASE("zero solution") {
    const auto g = RadialGrid::covering(0.05, 6.0);
    const auto params = make_params(5.0, Sign::Focusing);
    const auto traj = evolve(config_for(g, params, 2.0), RadialState::zero(0.0, params, g));
    CHECK(representation_residual(traj, 2.0, 2.0, 1.0) == 0.0);
  }
  SUBCASE("static W converges at second order") {
    double res[3];
    double h = 0.05;
    for (double& r : res) {
      const auto g = RadialGrid::covering(h, 10.0);
      const auto traj = static_trajectory(reference_W(g), static_cast<std::size_t>(std::lround(3.0 / h)) + 1);
      r = representation_residual(traj, 2.0, 2.0, 1.0);
      h /= 2;
    }
    MESSAGE("W representation residuals: " << res[0] << " " << res[1] << " " << res[2]);
    CHECK(res[0] < 1e-2);
    CHECK(test::order(res[0], res[1]) >= 1.8);
    CHECK(test::order(res[1], res[2]) >= 1.8);
  }
  SUBCASE("rejects points off the lattice or outside the cone") {
    const auto g = RadialGrid::covering(0.1, 6.0);
    const auto params = make_params(5.0, Sign::Focusing);
    const auto traj = evolve(config_for(g, params, 2.0), RadialState::zero(0.0, params, g));
    CHECK_THROWS_AS(representation_residual(traj, 2.05, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(representation_residual(traj, 1.0, 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(representation_residual(traj, 2.0, 1.0, 1.5), std::invalid_argument);
  }
}

TEST_CASE("characteristic transport residual") {
  SUBCASE("right-moving linear wave annihilates z1") {
    const double h = 0.02;
    const auto g = RadialGrid::covering(h, 14.0);
    const auto params = make_params(7.0, 1);
    auto f = [](double x) { return std::exp(-4.0 * (x - 4.0) * (x - 4.0)); };
    const auto s0 = test::state_from_w(params, g, 0.0, f);
    const auto sm = test::state_from_w(params, g, -h, [&](double r) { return f(r + h); });
    auto cfg = config_for(g, params, 4.0);
    cfg.nonlinear = false;
    const auto traj = evolve(cfg, s0, sm);
    // z1 = w_r + w_t vanishes for w = f(r - t); only z1 is transported on the
    // leftward characteristic, so query a segment where z2 is also exact.
    CHECK(characteristic_transport_residual(traj, 6.0, 2.0, 1.5) <= 1e-10);
  }
  SUBCASE("zero solution") {
    const auto g = RadialGrid::covering(0.05, 6.0);
    const auto params = make_params(5.0, Sign::Focusing);
    const auto traj = evolve(config_for(g, params, 2.0), RadialState::zero(0.0, params, g));
    CHECK(characteristic_transport_residual(traj, 1.0, 1.0, 0.5) == 0.0);
  }
  SUBCASE("static W converges at first order or better") {
    double res[3];
    double h = 0.04;
    for (double& r : res) {
      const auto g = RadialGrid::covering(h, 10.0);
      const auto traj = static_trajectory(reference_W(g), static_cast<std::size_t>(std::lround(4.0 / h)) + 1);
      r = characteristic_transport_residual(traj, 1.0, 2.0, 1.5);
      h /= 2;
    }
    MESSAGE("W characteristic residuals: " << res[0] << " " << res[1] << " " << res[2]);
    CHECK(test::order(res[0], res[1]) >= 0.9);
    CHECK(test::order(res[1], res[2]) >= 0.9);
  }
  SUBCASE("segment leaving the domain") {
    const auto g = RadialGrid::covering(0.05, 6.0);
    const auto params = make_params(5.0, Sign::Focusing);
    const auto traj = evolve(config_for(g, params, 2.0), RadialState::zero(0.0, params, g));
    CHECK_THROWS_AS(characteristic_transport_residual(traj, 1.0, 1.0, 1.5), std::invalid_argument);
  }
}
