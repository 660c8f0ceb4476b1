#include "nlwlab/core/scaling.hpp"

#include <cmath>
#include <stdexcept>

namespace nlwlab {

RadialState scale_state(const RadialState& s, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("scale_state: lambda must be positive");
  }
  if (lambda == 1.0) return s;
  const double a = s.params().a;
  const double fu = std::pow(lambda, -a);
  const double fv = std::pow(lambda, -a - 1.0);
  std::vector<double> u(s.u()), v(s.v());
  for (double& x : u) x *= fu;
  for (double& x : v) x *= fv;
  const RadialGrid grid(s.grid().h() * lambda, s.grid().n());
  return RadialState(s.t() * lambda, std::move(u), std::move(v), s.params(), grid);
}

}  // namespace nlwlab
