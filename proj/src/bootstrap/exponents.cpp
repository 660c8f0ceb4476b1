#include "nlwlab/bootstrap/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlwlab {

namespace {

void require_p(double p) {
  if (!std::isfinite(p) || p < 5.0) throw std::invalid_argument("bootstrap: p must be >= 5");
}

template <typename Real>
ExponentSequence iterate(double p_in, double beta0, std::size_t n_max, double tol) {
  const Real p = p_in;
  const Real a = Real(2) / (p - Real(1));
  const Real limit = Real(1) - a;
  ExponentSequence seq;
  seq.p = p_in;
  Real beta = beta0;
  seq.beta.push_back(static_cast<double>(beta));
  Real gap = std::abs(beta - limit);
  for (std::size_t n = 0; n < n_max && !(gap < tol); ++n) {
    const Real gamma = limit / (limit + beta * (p - Real(1)));
    beta = gamma * beta * p;
    seq.gamma.push_back(static_cast<double>(gamma));
    seq.beta.push_back(static_cast<double>(beta));
    gap = std::abs(beta - limit);
  }
  seq.converged = gap < tol;
  seq.limit_gap = static_cast<double>(gap);
  return seq;
}

bool close(double x, double y) { return std::abs(x - y) <= 1e-9 * std::max(std::abs(x), std::abs(y)); }

}  // namespace

ContractionConstant contraction_constant(double p) {
  require_p(p);
  const double e = 1.0 - 2.0 / (p - 1.0);
  ContractionConstant c;
  c.value = 0.5 * (std::pow(1.5, e) + std::pow(0.5, e));
  c.theta = 0.5 * (1.0 - c.value);
  return c;
}

ExponentSequence exponent_iteration(double p, double beta0, std::size_t n_max, double tol, Precision precision) {
  require_p(p);
  const double a = 2.0 / (p - 1.0);
  if (!(beta0 > 0.0) || beta0 > 1.0 - a) throw std::invalid_argument("exponent_iteration: beta0 must lie in (0, 1 - a]");
  if (!(tol > 0.0)) throw std::invalid_argument("exponent_iteration: tol must be positive");
  return precision == Precision::Extended ? iterate<long double>(p, beta0, n_max, tol)
                                          : iterate<double>(p, beta0, n_max, tol);
}

BootstrapStep bootstrap_step(double p, double beta) {
  require_p(p);
  const double a = 2.0 / (p - 1.0);
  BootstrapStep s;
  s.gamma = (1.0 - a) / (1.0 - a + beta * (p - 1.0));
  s.interior_exponent = (1.0 - s.gamma) + s.gamma * (a + beta);
  s.tail_exponent = a + s.gamma * beta * p;
  s.next_beta = s.gamma * beta * p;
  return s;
}

ConvexityReport convexity_step_check(std::span<const RadiusValue> samples_in, double p) {
  const auto cc = contraction_constant(p);
  std::vector<RadiusValue> samples(samples_in.begin(), samples_in.end());
  std::sort(samples.begin(), samples.end(), [](const auto& x, const auto& y) { return x.r < y.r; });
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i].g1 > samples[i - 1].g1) throw std::invalid_argument("convexity_step_check: g1 must be non-increasing");
  }
  struct Pair {
    double r, outer, inner;
  };
  std::vector<Pair> pairs;
  for (const auto& s : samples) {
    for (const auto& h : samples) {
      if (close(h.r, 0.5 * s.r)) pairs.push_back({s.r, s.g1, h.g1});
    }
  }
  if (pairs.empty()) throw std::invalid_argument("convexity_step_check: no dyadic pairs (r, r/2) in the samples");

  ConvexityReport rep;
  rep.contraction = cc.value;
  rep.theta = cc.theta;
  rep.pairs = pairs.size();
  for (const auto& pr : pairs) {
    if (pr.inner > 0.0) rep.c_p = std::max(rep.c_p, (pr.outer - cc.value * pr.inner) / std::pow(pr.inner, p));
  }
  // Smallest pair radius beyond which C_p g1(r/2)^{p-1} <= theta holds at every pair.
  std::size_t first = pairs.size();
  for (std::size_t i = pairs.size(); i-- > 0;) {
    if (rep.c_p * std::pow(pairs[i].inner, p - 1.0) <= cc.theta) {
      first = i;
    } else {
      break;
    }
  }
  if (first < pairs.size()) {
    rep.has_threshold = true;
    rep.threshold_radius = pairs[first].r;
    rep.linearized_holds = true;
    for (std::size_t i = first; i < pairs.size(); ++i) {
      const auto& pr = pairs[i];
      if (pr.inner > 0.0) rep.max_linear_ratio = std::max(rep.max_linear_ratio, pr.outer / pr.inner);
      if (pr.outer > (1.0 - cc.theta) * pr.inner) rep.linearized_holds = false;
    }
  }
  return rep;
}

}  // namespace nlwlab
