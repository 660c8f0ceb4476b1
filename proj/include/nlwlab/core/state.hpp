#pragma once

#include <vector>

#include "nlwlab/core/grid.hpp"
#include "nlwlab/core/params.hpp"

namespace nlwlab {

/// One time slice (u, d_t u) sampled on the nodes of a radial grid.
/// Immutable after construction; the constructor rejects non-finite entries
/// and size mismatches.
class RadialState {
 public:
  RadialState(double t, std::vector<double> u, std::vector<double> v,
              const EquationParams& params, const RadialGrid& grid);

  /// Zero data at time t.
  static RadialState zero(double t, const EquationParams& params, const RadialGrid& grid);

  double t() const { return t_; }
  const std::vector<double>& u() const { return u_; }
  const std::vector<double>& v() const { return v_; }
  const EquationParams& params() const { return params_; }
  const RadialGrid& grid() const { return grid_; }

  /// w_j = r_j u_j, the odd-in-r reduction; w_0 = 0.
  std::vector<double> w() const;
  double w(std::size_t j) const { return grid_.r(j) * u_[j]; }

  double max_abs_u() const;

 private:
  double t_;
  std::vector<double> u_;
  std::vector<double> v_;
  EquationParams params_;
  RadialGrid grid_;
};

/// Value at the origin of an even function from its samples at r = h, 2h
/// (quadratic c0 + c2 r^2 through the two nodes).
inline double even_extrapolate_origin(double f1, double f2) { return (4.0 * f1 - f2) / 3.0; }

}  // namespace nlwlab
