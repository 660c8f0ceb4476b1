#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nlwlab {

/// (1/2)[(3/2)^{1-a} + (1/2)^{1-a}] = 1 - 2 theta_p.
struct ContractionConstant {
  double value = 0.0;
  double theta = 0.0;
};

/// Throws std::invalid_argument for p < 5.
ContractionConstant contraction_constant(double p);

enum class Precision { Double, Extended };

/// Iterates of beta_{n+1} = gamma_n beta_n p, gamma_n = (1-a)/(1-a+beta_n(p-1)).
/// gamma[n] is the factor that produced beta[n+1].
struct ExponentSequence {
  double p = 0.0;
  std::vector<double> beta;
  std::vector<double> gamma;
  bool converged = false;
  double limit_gap = 0.0;  // |beta_last - (1 - a)|
};

/// Runs until |beta_n - (1-a)| < tol or n_max iterations. Requires
/// 0 < beta0 <= 1 - a (beta0 = 1 - a is the fixed point).
ExponentSequence exponent_iteration(double p, double beta0, std::size_t n_max = 100000, double tol = 1e-12,
                                    Precision precision = Precision::Double);

/// Exponents of the two terms in the decay bound after one step:
/// r^{-[(1-gamma) + gamma(a+beta)]} and r^{-[a + gamma beta p]}; gamma makes them equal.
struct BootstrapStep {
  double gamma = 0.0;
  double interior_exponent = 0.0;
  double tail_exponent = 0.0;
  double next_beta = 0.0;
};

BootstrapStep bootstrap_step(double p, double beta);

/// g1 sampled at a radius.
struct RadiusValue {
  double r = 0.0;
  double g1 = 0.0;
};

/// Result of testing g1(r) <= K g1(r/2) + C_p g1(r/2)^p on dyadic pairs.
struct ConvexityReport {
  double contraction = 0.0;  // K = 1 - 2 theta_p
  double theta = 0.0;
  double c_p = 0.0;          // smallest constant that makes every pair hold
  std::size_t pairs = 0;
  bool has_threshold = false;
  double threshold_radius = 0.0;  // from here on C_p g1(r/2)^{p-1} <= theta_p
  bool linearized_holds = false;  // g1(r) <= (1 - theta_p) g1(r/2) beyond the threshold
  double max_linear_ratio = 0.0;  // max g1(r)/g1(r/2) beyond the threshold
};

/// Samples need not be sorted; g1 must be non-increasing in r and at least
/// one pair (r, r/2) must be present. Throws std::invalid_argument otherwise.
ConvexityReport convexity_step_check(std::span<const RadiusValue> samples, double p);

}  // namespace nlwlab
