#include <cmath>
#include <vector>

#include "doctest.h"
#include "nlwlab/bootstrap/decay.hpp"
#include "nlwlab/bootstrap/exponents.hpp"
#include "nlwlab/core/initial_data.hpp"
#include "nlwlab/core/reference.hpp"
#include "nlwlab/solver/solver.hpp"

using namespace nlwlab;

TEST_CASE("contraction constant") {
  // Frozen from tests/oracles/frozen_values.py.
  const auto c5 = contraction_constant(5.0);
  CHECK(c5.value == doctest::Approx(0.9659258262890683).epsilon(1e-14));
  CHECK(c5.theta == doctest::Approx(0.017037086855465857).epsilon(1e-12));
  CHECK(contraction_constant(7.0).value == doctest::Approx(0.9701656110259424).epsilon(1e-14));
  CHECK(contraction_constant(1000.0).value == doctest::Approx(0.9997386018912535).epsilon(1e-14));
  for (double p = 5.0; p <= 1e4; p *= 1.001) {
    const auto c = contraction_constant(p);
    CHECK(c.value > 0.0);
    CHECK(c.value < 1.0);
    CHECK(c.theta == doctest::Approx(0.5 * (1.0 - c.value)));
  }
  CHECK_THROWS_AS(contraction_constant(4.5), std::invalid_argument);
}

TEST_CASE("exponent iteration") {
  SUBCASE("p = 7 from 0.1") {
    const auto seq = exponent_iteration(7.0, 0.1, 200, 1e-10);
    REQUIRE(seq.beta.size() > 3);
    CHECK(seq.beta[1] == doctest::Approx(0.368421052631579).epsilon(1e-14));
    CHECK(seq.beta[2] == doctest::Approx(0.597560975609756).epsilon(1e-14));
    CHECK(seq.beta[3] == doctest::Approx(0.655831739961759).epsilon(1e-14));
    CHECK(seq.converged);
    CHECK(seq.limit_gap < 1e-10);
    CHECK(std::abs(seq.beta.back() - 2.0 / 3.0) < 1e-10);
  }
  SUBCASE("monotone, bounded, gamma p > 1") {
    for (double p : {5.0, 6.0, 7.0, 9.0, 13.0, 100.0}) {
      const double limit = 1.0 - 2.0 / (p - 1.0);
      for (double beta0 : {0.01, 0.1, 0.3 * limit}) {
        for (auto prec : {Precision::Double, Precision::Extended}) {
          const auto seq = exponent_iteration(p, beta0, 200, 1e-10, prec);
          CHECK(seq.converged);
          CHECK(seq.beta.size() <= 201);
          for (std::size_t n = 0; n < seq.gamma.size(); ++n) {
            CHECK(seq.beta[n + 1] > seq.beta[n]);
            CHECK(seq.beta[n + 1] < limit);
            CHECK(seq.gamma[n] > 0.0);
            CHECK(seq.gamma[n] < 1.0);
            CHECK(seq.gamma[n] * p > 1.0);
          }
        }
      }
    }
  }
  SUBCASE("p = 5 from 0.01 reaches 1/2") {
    const auto seq = exponent_iteration(5.0, 0.01, 200, 1e-10);
    CHECK(seq.converged);
    CHECK(std::abs(seq.beta.back() - 0.5) < 1e-10);
  }
  SUBCASE("fixed point") {
    for (double p : {5.0, 7.0, 11.0, 17.0}) {
      const double limit = 1.0 - 2.0 / (p - 1.0);
      const auto seq = exponent_iteration(p, limit);
      CHECK(seq.beta.size() == 1);
      CHECK(seq.converged);
      CHECK(seq.limit_gap == 0.0);
      // gamma at the fixed point is 1/p to one ulp.
      const double gamma = bootstrap_step(p, limit).gamma;
      CHECK(std::abs(gamma - 1.0 / p) <= std::nextafter(1.0 / p, 1.0) - 1.0 / p);
    }
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(exponent_iteration(7.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(exponent_iteration(7.0, 0.7), std::invalid_argument);
    CHECK_THROWS_AS(exponent_iteration(4.0, 0.1), std::invalid_argument);
  }
}

TEST_CASE("power-law substitution reproduces the exponent gains") {
  // With g1 ~ r^{-beta} and |u| ~ r^{-(a+beta)}, one step balances the two
  // terms at exponent a + beta_{n+1}.
  for (double p : {5.0, 7.0, 9.0}) {
    const double a = 2.0 / (p - 1.0);
    const auto seq = exponent_iteration(p, 0.05, 50, 1e-12);
    for (std::size_t n = 0; n + 1 < seq.beta.size(); ++n) {
      const auto st = bootstrap_step(p, seq.beta[n]);
      CHECK(st.interior_exponent == doctest::Approx(st.tail_exponent).epsilon(1e-13));
      CHECK(st.tail_exponent == doctest::Approx(a + seq.beta[n + 1]).epsilon(1e-13));
      CHECK(st.next_beta == doctest::Approx(seq.beta[n + 1]).epsilon(1e-13));
    }
  }
}

TEST_CASE("convexity step") {
  std::vector<RadiusValue> w;
  for (double r = 0.25; r <= 256.0; r *= 2.0) {
    const double g1 = r >= std::sqrt(3.0) ? std::sqrt(r) * ground_state_W(r) : 0.9306048591020996;
    w.push_back({r, g1});
  }
  SUBCASE("W profile satisfies the linearized contraction") {
    const auto rep = convexity_step_check(w, 5.0);
    CHECK(rep.pairs == w.size() - 1);
    CHECK(rep.c_p >= 0.0);
    CHECK(rep.has_threshold);
    CHECK(rep.linearized_holds);
    CHECK(rep.max_linear_ratio <= 1.0 - rep.theta);
    // Asymptotically g1(r)/g1(r/2) -> 2^{-1/2}.
    CHECK(rep.max_linear_ratio == doctest::Approx(std::sqrt(0.5)).epsilon(0.05));
  }
  SUBCASE("pure power law with the W exponent") {
    std::vector<RadiusValue> s;
    for (double r = 1.0; r <= 64.0; r *= 2.0) s.push_back({r, std::sqrt(3.0) / std::sqrt(r)});
    const auto rep = convexity_step_check(s, 5.0);
    CHECK(rep.c_p == 0.0);
    CHECK(rep.linearized_holds);
    CHECK(rep.max_linear_ratio == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  }
  SUBCASE("zero") {
    const std::vector<RadiusValue> z{{1.0, 0.0}, {2.0, 0.0}, {4.0, 0.0}};
    const auto rep = convexity_step_check(z, 7.0);
    CHECK(rep.c_p == 0.0);
    CHECK(rep.linearized_holds);
  }
  SUBCASE("invalid input") {
    const std::vector<RadiusValue> up{{1.0, 0.1}, {2.0, 0.2}};
    CHECK_THROWS_AS(convexity_step_check(up, 5.0), std::invalid_argument);
    const std::vector<RadiusValue> nopair{{1.0, 0.2}, {3.0, 0.1}};
    CHECK_THROWS_AS(convexity_step_check(nopair, 5.0), std::invalid_argument);
  }
}

TEST_CASE("g recursion") {
  SUBCASE("static W has stable ratios") {
    const auto g = RadialGrid::covering(0.02, 64.0);
    const auto rep = g_recursion_verify(static_trajectory(reference_W(g), 3));
    CHECK_FALSE(rep.vacuous);
    CHECK(rep.windows.size() >= 4);
    CHECK(std::isfinite(rep.max_ratio2));
    CHECK(std::isfinite(rep.max_ratio3));
    CHECK(rep.spread2 <= 10.0);
    CHECK(rep.spread3 <= 10.0);
    CHECK(rep.g1_monotone);
  }
  SUBCASE("zero trajectory is vacuous") {
    const auto g = RadialGrid::covering(0.05, 32.0);
    const auto rep = g_recursion_verify(static_trajectory(RadialState::zero(0.0, make_params(7.0, 1), g), 3));
    CHECK(rep.vacuous);
    CHECK(rep.max_ratio2 == 0.0);
  }
  SUBCASE("small defocusing run keeps g1 monotone") {
    const auto g = RadialGrid::covering(0.02, 40.0);
    const auto params = make_params(7.0, 1);
    SolverConfig cfg{g, params};
    cfg.t_final = 8.0;
    cfg.snapshot_stride = 20;
    const auto traj = evolve(cfg, bump_state(params, g, 1.0, 0.3));
    CHECK(g_recursion_verify(traj).g1_monotone);
  }
  SUBCASE("too few windows") {
    const auto g = RadialGrid::covering(0.05, 10.0);
    CHECK_THROWS_AS(g_recursion_verify(static_trajectory(reference_W(g), 3)), std::invalid_argument);
  }
}

TEST_CASE("decay fit") {
  SUBCASE("static W") {
    const auto g = RadialGrid::covering(0.01, 50.0);
    const auto fit = decay_fit(static_trajectory(reference_W(g), 3), 4.0, 12.5);
    // Independent least squares on the closed form over the same nodes.
    double sx = 0, sy = 0, sxx = 0, sxy = 0, n = 0, c0 = 0;
    for (std::size_t j = 400; j <= 1250; ++j) {
      const double r = g.r(j), x = std::log(r), y = std::log(ground_state_W(r));
      sx += x, sy += y, sxx += x * x, sxy += x * y, n += 1;
      c0 = std::max(c0, r * ground_state_W(r));
    }
    CHECK(fit.samples == 851);
    CHECK(fit.slope == doctest::Approx((n * sxy - sx * sy) / (n * sxx - sx * sx)).epsilon(1e-10));
    CHECK(fit.c0 == doctest::Approx(c0).epsilon(1e-14));
    CHECK(std::abs(fit.c0 / std::sqrt(3.0) - 1.0) <= 0.02);
    // rW(r) = sqrt 3 (1 + 3/r^2)^{-1/2} only approaches 1/r for r >> sqrt 3.
    CHECK(fit.slope == doctest::Approx(-0.9419).epsilon(1e-3));
  }
  SUBCASE("the slope approaches -1 on a wide range") {
    const auto g = RadialGrid::covering(0.05, 2000.0);
    const auto fit = decay_fit(static_trajectory(reference_W(g), 3), 4.0, 500.0);
    CHECK(std::abs(fit.slope + 1.0) <= 0.05);
  }
  SUBCASE("zero trajectory") {
    const auto g = RadialGrid::covering(0.05, 20.0);
    const auto fit = decay_fit(static_trajectory(RadialState::zero(0.0, make_params(7.0, 1), g), 3), 1.0, 5.0);
    CHECK(fit.c0 == 0.0);
    CHECK_FALSE(fit.slope_defined);
  }
  SUBCASE("range checks") {
    const auto g = RadialGrid::covering(0.05, 20.0);
    const auto traj = static_trajectory(reference_W(g), 3);
    CHECK_THROWS_AS(decay_fit(traj, 0.5, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(decay_fit(traj, 30.0, 40.0), std::invalid_argument);
  }
}
