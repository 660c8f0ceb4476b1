#pragma once

#include "nlwlab/core/state.hpp"

namespace nlwlab {

/// Critical rescaling u -> lambda^{-a} u(x/lambda), v -> lambda^{-a-1} v(x/lambda),
/// t -> lambda t. The node values move to a grid of spacing lambda*h, so no
/// resampling takes place. Throws std::invalid_argument unless lambda > 0.
RadialState scale_state(const RadialState& s, double lambda);

}  // namespace nlwlab
