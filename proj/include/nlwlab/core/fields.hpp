#pragma once

#include <vector>

#include "nlwlab/core/state.hpp"

namespace nlwlab {

/// z1 = d_r w + d_t w and z2 = d_r w - d_t w on the grid nodes, with d_r w by
/// central differences (odd reflection at the origin) and d_t w = r v.
struct CharacteristicFields {
  std::vector<double> z1;
  std::vector<double> z2;
};

CharacteristicFields characteristic_fields(const RadialState& s);

}  // namespace nlwlab
