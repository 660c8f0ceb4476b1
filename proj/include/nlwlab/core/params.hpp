#pragma once

namespace nlwlab {

/// Sign of the nonlinearity: +1 defocusing, -1 focusing.
enum class Sign : int { Defocusing = 1, Focusing = -1 };

/// Exponent and sign of (d_t^2 - Laplacian) u + mu |u|^{p-1} u = 0 in three
/// space dimensions, together with the critical indices derived from p.
struct EquationParams {
  double p = 5.0;
  Sign sign = Sign::Defocusing;
  double a = 0.5;        // 2/(p-1), decay exponent of the critical scaling
  double m = 2.0;        // (p-1)/2 = 1/a
  double s_p = 1.0;      // 3/2 - 2/(p-1)
  double alpha_p = 0.5;  // s_p - 1/2

  int mu() const { return static_cast<int>(sign); }
  bool focusing() const { return sign == Sign::Focusing; }
};

/// Builds the parameter set; throws std::invalid_argument for p < 5 or a
/// non-finite p.
EquationParams make_params(double p, Sign sign);
EquationParams make_params(double p, int mu);

}  // namespace nlwlab
