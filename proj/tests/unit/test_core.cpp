#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "doctest.h"
#include "nlwlab/core/initial_data.hpp"
#include "nlwlab/core/io.hpp"
#include "nlwlab/core/params.hpp"
#include "nlwlab/core/quadrature.hpp"
#include "nlwlab/core/reference.hpp"
#include "nlwlab/core/scaling.hpp"

using namespace nlwlab;

TEST_CASE("make_params derives the critical indices") {
  // Frozen from tests/oracles/frozen_values.py.
  const auto p5 = make_params(5.0, Sign::Focusing);
  CHECK(p5.s_p == 1.0);
  CHECK(p5.a == 0.5);
  CHECK(p5.m == 2.0);
  CHECK(p5.alpha_p == 0.5);
  CHECK(p5.mu() == -1);

  const auto p7 = make_params(7.0, 1);
  CHECK(p7.s_p == doctest::Approx(7.0 / 6.0).epsilon(1e-15));
  CHECK(p7.a == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(p7.m == 3.0);
  CHECK(p7.mu() == 1);
}

TEST_CASE("make_params rejects the subcritical range and bad signs") {
  CHECK_THROWS_AS(make_params(4.999, Sign::Defocusing), std::invalid_argument);
  CHECK_THROWS_AS(make_params(3.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(std::nan(""), 1), std::invalid_argument);
  CHECK_THROWS_AS(make_params(7.0, 0), std::invalid_argument);
}

TEST_CASE("index identities hold to one ulp across p in [5, 20]") {
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> dist(5.0, 20.0);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 0; i < 2000; ++i) {
    const double p = i < 16 ? 5.0 + i : dist(rng);
    const auto e = make_params(p, Sign::Defocusing);
    // Evaluate on the stored doubles in extended precision. The second identity
    // cancels terms of size p, so one ulp is measured at that scale.
    const long double am = static_cast<long double>(e.a) * e.m;
    const long double id2 = static_cast<long double>(e.m) * (2.0L - static_cast<long double>(e.a) * p);
    CHECK(std::abs(am - 1.0L) <= eps);
    CHECK(std::abs(id2 + 1.0L) <= std::nextafter(p, 100.0) - p);
    CHECK(e.s_p >= 1.0);
    CHECK(e.s_p < 1.5);
    CHECK(e.a > 0.0);
    CHECK(e.a <= 0.5);
    CHECK(e.alpha_p >= 0.5);
    CHECK(e.alpha_p < 1.0);
  }
}

TEST_CASE("grid lattice lookup") {
  const auto g = RadialGrid::covering(0.01, 50.0);
  CHECK(g.n() == 5000);
  CHECK(g.outer_radius() == doctest::Approx(50.0));
  std::size_t j = 0;
  CHECK(g.node_index(12.5, j));
  CHECK(j == 1250);
  CHECK_FALSE(g.node_index(12.505, j));
  CHECK_THROWS(RadialGrid::covering(0.03, 1.0));
  CHECK_THROWS(RadialGrid(-1.0, 10));
}

TEST_CASE("state rejects non-finite data and keeps w consistent") {
  const auto g = RadialGrid(0.1, 10);
  const auto params = make_params(7.0, 1);
  std::vector<double> u(g.size(), 1.0), v(g.size(), 0.0);
  u[3] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(RadialState(0.0, u, v, params, g), std::invalid_argument);
  CHECK_THROWS_AS(RadialState(0.0, std::vector<double>(3), v, params, g), std::invalid_argument);

  const auto s = gaussian_state(params, g, 1.0, 1.0);
  const auto w = s.w();
  CHECK(w[0] == 0.0);
  double worst = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) worst = std::max(worst, std::abs(w[j] - g.r(j) * s.u()[j]));
  CHECK(worst == 0.0);
}

TEST_CASE("reference W") {
  const auto g = RadialGrid::covering(0.01, 50.0);
  const auto W = reference_W(g);
  CHECK(W.u()[0] == 1.0);
  CHECK(W.params().p == 5.0);
  CHECK(W.params().focusing());
  // r W(r) -> sqrt(3).
  CHECK(1e6 * ground_state_W(1e6) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));

  // Discrete residual of Delta W + W^5 is O(h^2): Delta u = (r u)'' / r.
  auto residual = [](double h) {
    const auto grid = RadialGrid::covering(h, 20.0);
    const auto s = reference_W(grid);
    const auto w = s.w();
    double worst = 0.0;
    for (std::size_t j = 1; j < grid.n(); ++j) {
      const double lap = (w[j + 1] - 2.0 * w[j] + w[j - 1]) / (h * h) / grid.r(j);
      worst = std::max(worst, std::abs(lap + std::pow(s.u()[j], 5)));
    }
    return worst;
  };
  const double e1 = residual(0.02), e2 = residual(0.01), e3 = residual(0.005);
  CHECK(e1 < 1e-3);
  CHECK(std::log2(e1 / e2) > 1.9);
  CHECK(std::log2(e2 / e3) > 1.9);

  // Closed-form derivative against central differences.
  for (double r : {0.3, 1.0, 4.0}) {
    const double fd = (ground_state_W(r + 1e-5) - ground_state_W(r - 1e-5)) / 2e-5;
    CHECK(ground_state_W_prime(r) == doctest::Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("ODE blowup reference") {
  const auto p5 = make_params(5.0, Sign::Focusing);
  // c^4 = a(a+1) = 3/4; oracle value 0.9306048591020996.
  CHECK(ode_blowup_coefficient(p5) == doctest::Approx(0.9306048591020996).epsilon(1e-14));

  for (double p : {5.0, 7.0, 9.5}) {
    const auto e = make_params(p, Sign::Focusing);
    const double T = 1.3;
    for (double t : {0.0, 0.7, 1.2}) {
      const double k = 1e-4;
      const double u = reference_ode_blowup(e, T, t);
      const double upp = (reference_ode_blowup(e, T, t + k) - 2.0 * u + reference_ode_blowup(e, T, t - k)) / (k * k);
      CHECK(upp / std::pow(u, p) == doctest::Approx(1.0).epsilon(1e-5));
    }
    // Log-slope against log(T - t) is -a.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = 50;
    for (int i = 0; i < n; ++i) {
      const double gap = std::pow(10.0, -1.0 - 8.0 * i / (n - 1));
      const double x = std::log(gap), y = std::log(reference_ode_blowup(e, T, T - gap));
      sx += x, sy += y, sxx += x * x, sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    CHECK(std::abs(slope + e.a) < 1e-6);
  }
  CHECK_THROWS_AS(reference_ode_blowup(p5, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(reference_ode_blowup(make_params(5.0, Sign::Defocusing), 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("scale_state") {
  const auto g = RadialGrid(0.05, 200);
  const auto params = make_params(7.0, 1);
  auto s = gaussian_state(params, g, 1.5, 0.7);
  std::vector<double> v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) v[j] = std::sin(g.r(j)) * s.u()[j];
  s = RadialState(0.25, s.u(), v, params, g);

  SUBCASE("identity") {
    const auto same = scale_state(s, 1.0);
    CHECK(same.u() == s.u());
    CHECK(same.v() == s.v());
    CHECK(same.grid() == s.grid());
  }
  SUBCASE("group law") {
    for (double lambda : {0.5, 2.0, 3.7}) {
      const auto back = scale_state(scale_state(s, lambda), 1.0 / lambda);
      CHECK(back.grid().h() == doctest::Approx(g.h()).epsilon(1e-15));
      CHECK(back.t() == doctest::Approx(s.t()).epsilon(1e-15));
      for (std::size_t j = 0; j < g.size(); ++j) {
        CHECK(back.u()[j] == doctest::Approx(s.u()[j]).epsilon(1e-14));
        CHECK(back.v()[j] == doctest::Approx(s.v()[j]).epsilon(1e-14));
      }
    }
  }
  SUBCASE("r^a |u| is invariant under the node mapping") {
    const double a = params.a;
    const double lambda = 2.5;
    const auto sc = scale_state(s, lambda);
    for (std::size_t j = 1; j < g.size(); ++j) {
      CHECK(std::pow(sc.grid().r(j), a) * std::abs(sc.u()[j]) ==
            doctest::Approx(std::pow(g.r(j), a) * std::abs(s.u()[j])).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(scale_state(s, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scale_state(s, -1.0), std::invalid_argument);
}

TEST_CASE("columnar state format round-trips bit-exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const auto g = RadialGrid(0.1 / 3.0, 64);
  std::vector<double> u(g.size()), v(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    u[j] = dist(rng) * std::pow(10.0, 40.0 * dist(rng));
    v[j] = dist(rng) / 3.0;
  }
  const RadialState s(1.0 / 7.0, u, v, make_params(5.0 + 1.0 / 3.0, -1), g);
  std::stringstream ss;
  write_states(ss, {s, s});
  const auto back = read_states(ss);
  REQUIRE(back.size() == 2);
  for (const auto& b : back) {
    CHECK(b.t() == s.t());
    CHECK(b.params().p == s.params().p);
    CHECK(b.params().sign == s.params().sign);
    CHECK(b.grid() == s.grid());
    CHECK(b.u() == s.u());
    CHECK(b.v() == s.v());
  }
  std::stringstream bad("{\"p\":5,\"mu\":1,\"h\":0.1,\"n\":10,\"t\":0}\n0 1 0\n");
  CHECK_THROWS(read_state(bad));
}

TEST_CASE("format_double is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1e-300) == "1e-300");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double x = std::bit_cast<double>(rng() & 0x7fefffffffffffffULL);
    CHECK(parse_double(format_double(x)) == x);
  }
}

TEST_CASE("quadrature helpers") {
  const auto g = RadialGrid(0.01, 400);
  std::vector<double> f(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) f[j] = g.r(j);
  CHECK(trapezoid(f, g.h()) == doctest::Approx(8.0).epsilon(1e-12));
  // Linear integrand: partial cells are exact too.
  CHECK(trapezoid_range(f, g, 0.505, 2.2525) == doctest::Approx(0.5 * (2.2525 * 2.2525 - 0.505 * 0.505)).epsilon(1e-12));
  CHECK(trapezoid_range(f, g, 1.0, 1.0) == 0.0);

  CHECK(signed_power(-2.0, 5.0) == -32.0);
  CHECK(signed_power(-2.0, 6.0) == -64.0);
  CHECK(signed_power(2.0, 5.5) == doctest::Approx(std::pow(2.0, 5.5)));
  CHECK(signed_power(-2.0, 5.5) == doctest::Approx(-std::pow(2.0, 5.5)));
  CHECK(abs_power(-3.0, 2.0) == 9.0);
  CHECK(abs_power(0.0, 2.5) == 0.0);
}
