#pragma once

#include <cstddef>

namespace nlwlab {

/// Uniform radial grid with nodes r_j = j*h, j = 0..n. Node 0 is the origin
/// and the outer radius is n*h.
class RadialGrid {
 public:
  RadialGrid() = default;
  RadialGrid(double h, std::size_t n);

  /// Grid with spacing h covering [0, R]; R must be an integer multiple of h
  /// to within 1e-9 relative.
  static RadialGrid covering(double h, double outer_radius);

  double h() const { return h_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return n_ + 1; }
  double r(std::size_t j) const { return static_cast<double>(j) * h_; }
  double outer_radius() const { return r(n_); }

  /// Index of the node at radius r, if r lies on the lattice.
  bool node_index(double r, std::size_t& j) const;

  bool operator==(const RadialGrid& o) const { return h_ == o.h_ && n_ == o.n_; }

 private:
  double h_ = 1.0;
  std::size_t n_ = 4;
};

}  // namespace nlwlab
