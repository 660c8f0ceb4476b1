#include "nlwlab/core/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace nlwlab {

RadialGrid::RadialGrid(double h, std::size_t n) : h_(h), n_(n) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("RadialGrid: spacing must be positive");
  if (n < 4) throw std::invalid_argument("RadialGrid: need at least 4 intervals");
}

RadialGrid RadialGrid::covering(double h, double outer_radius) {
  if (!(h > 0.0)) throw std::invalid_argument("RadialGrid: spacing must be positive");
  const double count = outer_radius / h;
  const double rounded = std::round(count);
  if (std::abs(count - rounded) > 1e-9 * std::max(1.0, count)) {
    throw std::invalid_argument("RadialGrid: outer radius is not a multiple of the spacing");
  }
  return RadialGrid(h, static_cast<std::size_t>(rounded));
}

bool RadialGrid::node_index(double r, std::size_t& j) const {
  const double x = r / h_;
  const double k = std::round(x);
  if (k < 0.0 || k > static_cast<double>(n_) || std::abs(x - k) > 1e-9 * std::max(1.0, x)) return false;
  j = static_cast<std::size_t>(k);
  return true;
}

}  // namespace nlwlab
