#include "nlwlab/core/fields.hpp"

#include "nlwlab/core/quadrature.hpp"

namespace nlwlab {

CharacteristicFields characteristic_fields(const RadialState& s) {
  const auto& g = s.grid();
  const auto wr = radial_derivative_odd(s.w(), g);
  CharacteristicFields out;
  out.z1.resize(g.size());
  out.z2.resize(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double wt = g.r(j) * s.v()[j];
    out.z1[j] = wr[j] + wt;
    out.z2[j] = wr[j] - wt;
  }
  return out;
}

}  // namespace nlwlab
