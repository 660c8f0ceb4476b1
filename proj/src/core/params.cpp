#include "nlwlab/core/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlwlab {

EquationParams make_params(double p, Sign sign) {
  if (!std::isfinite(p) || p < 5.0) {
    throw std::invalid_argument("make_params: exponent p must be >= 5, got " + std::to_string(p));
  }
  EquationParams out;
  out.p = p;
  out.sign = sign;
  out.a = 2.0 / (p - 1.0);
  out.m = (p - 1.0) / 2.0;
  out.s_p = 1.5 - out.a;
  out.alpha_p = out.s_p - 0.5;
  return out;
}

EquationParams make_params(double p, int mu) {
  if (mu != 1 && mu != -1) {
    throw std::invalid_argument("make_params: mu must be +1 or -1, got " + std::to_string(mu));
  }
  return make_params(p, mu == 1 ? Sign::Defocusing : Sign::Focusing);
}

}  // namespace nlwlab
