#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "nlwlab/core/state.hpp"

namespace nlwlab::test {

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double order(double coarse, double fine, double ratio = 2.0) {
  return std::log(coarse / fine) / std::log(ratio);
}

inline RadialState state_from(const EquationParams& params, const RadialGrid& grid, double t,
                              const std::function<double(double)>& u, const std::function<double(double)>& v) {
  std::vector<double> uu(grid.size()), vv(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    uu[j] = u(grid.r(j));
    vv[j] = v(grid.r(j));
  }
  return RadialState(t, std::move(uu), std::move(vv), params, grid);
}

/// State with w = r u prescribed on the nodes; u at the origin comes from the
/// even extrapolation.
inline RadialState state_from_w(const EquationParams& params, const RadialGrid& grid, double t,
                                const std::function<double(double)>& w) {
  std::vector<double> u(grid.size()), v(grid.size(), 0.0);
  for (std::size_t j = 1; j < grid.size(); ++j) u[j] = w(grid.r(j)) / grid.r(j);
  u[0] = even_extrapolate_origin(u[1], u[2]);
  return RadialState(t, std::move(u), std::move(v), params, grid);
}

}  // namespace nlwlab::test
