#include "nlwlab/core/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nlwlab {

RadialState::RadialState(double t, std::vector<double> u, std::vector<double> v,
                         const EquationParams& params, const RadialGrid& grid)
    : t_(t), u_(std::move(u)), v_(std::move(v)), params_(params), grid_(grid) {
  if (u_.size() != grid_.size() || v_.size() != grid_.size()) {
    throw std::invalid_argument("RadialState: expected " + std::to_string(grid_.size()) +
                                " samples per field");
  }
  if (!std::isfinite(t_)) throw std::invalid_argument("RadialState: non-finite time");
  for (std::size_t j = 0; j < u_.size(); ++j) {
    if (!std::isfinite(u_[j]) || !std::isfinite(v_[j])) {
      throw std::invalid_argument("RadialState: non-finite value at node " + std::to_string(j));
    }
  }
}

RadialState RadialState::zero(double t, const EquationParams& params, const RadialGrid& grid) {
  return RadialState(t, std::vector<double>(grid.size(), 0.0), std::vector<double>(grid.size(), 0.0),
                     params, grid);
}

std::vector<double> RadialState::w() const {
  std::vector<double> out(u_.size());
  for (std::size_t j = 0; j < u_.size(); ++j) out[j] = grid_.r(j) * u_[j];
  return out;
}

double RadialState::max_abs_u() const {
  double m = 0.0;
  for (double x : u_) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace nlwlab
