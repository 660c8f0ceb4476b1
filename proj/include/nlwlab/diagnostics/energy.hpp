#pragma once

#include "nlwlab/core/state.hpp"

namespace nlwlab {

/// Pieces of E = int |grad u|^2/2 + (d_t u)^2/2 + mu |u|^{p+1}/(p+1).
/// For the focusing sign the potential enters with a minus and the energy is
/// not coercive.
struct EnergyParts {
  double gradient = 0.0;   // int |grad u|^2 / 2
  double kinetic = 0.0;    // int (d_t u)^2 / 2
  double potential = 0.0;  // int |u|^{p+1} / (p+1), always >= 0
  double total = 0.0;
  bool coercive = true;
};

/// With `nonlinear` false the potential is reported but left out of the total
/// (the conserved quantity of the linear wave equation).
EnergyParts energy_parts(const RadialState& s, bool nonlinear = true);
double energy(const RadialState& s, bool nonlinear = true);

/// z = int u d_t u + int (x . grad u) d_t u.
double virial(const RadialState& s);

/// z' = -1/2 int (d_t u)^2 - 1/2 int |grad u|^2 - mu (1 - 3/(p+1)) int |u|^{p+1}.
double virial_rate(const RadialState& s, bool nonlinear = true);

struct SupportHardy {
  double support_radius = 0.0;  // largest r_j with max(|u_j|, |v_j|) > floor
  double hardy_value = 0.0;     // int u^2 / |x|^2 = 4 pi int u^2 dr
};

SupportHardy support_and_hardy(const RadialState& s, double floor = 1e-12);

}  // namespace nlwlab
