#pragma once

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

#include "nlwlab/norms/radial.hpp"

namespace nlwlab {

/// Scale-critical, energy-level, tail and space-time norms of a state.
struct NormReport {
  double t = 0.0;
  double hsp = 0.0;           // ||u||_{Hdot^{s_p}}
  double hsp_minus1 = 0.0;    // ||v||_{Hdot^{s_p - 1}}
  double grad_l2 = 0.0;       // ||grad u||_{L^2}, same differences as the energy
  double v_l2 = 0.0;          // ||v||_{L^2}
  double u_lp1 = 0.0;         // ||u||_{L^{p+1}}
  bool boundary_decayed = true;
  std::vector<TailRecord> tails;
  std::vector<GSample> g;
  std::optional<double> sp_norm;
};

NormReport make_norm_report(const RadialState& s, std::span<const double> tail_radii,
                            std::span<const double> g_radii);

/// Same, for the last snapshot of a trajectory, with the S_p norm over the
/// whole stored interval (when enough snapshots exist) and g moduli taken as
/// a supremum over snapshots.
NormReport make_norm_report(const Trajectory& traj, std::span<const double> tail_radii,
                            std::span<const double> g_radii);

nlohmann::ordered_json to_json(const NormReport& report);

}  // namespace nlwlab
