#pragma once

#include <functional>
#include <span>
#include <vector>

#include "incmap/geometry.hpp"

namespace incmap {

/// Equispaced angular grid with an odd node count 2N+1 on one circle:
/// theta_j = 2*pi*j/(2N+1), j = -N..N, eta_j = center + r*exp(i*theta_j).
class CircleGrid {
 public:
  CircleGrid(Circle circle, int N);

  const Circle& circle() const { return circle_; }
  int N() const { return N_; }
  int node_count() const { return 2 * N_ + 1; }
  const std::vector<double>& thetas() const { return thetas_; }
  const std::vector<cplx>& nodes() const { return nodes_; }

  /// Angle of an on-circle point, reduced to (-pi, pi].
  double angle_of(cplx xi, double tol = 1e-10) const;

 private:
  Circle circle_;
  int N_;
  std::vector<double> thetas_;
  std::vector<cplx> nodes_;
};

/// Contour integral of a sampled density over the grid's circle by the
/// periodic trapezoidal rule (spectrally accurate for analytic densities).
cplx integrate_regular(std::span<const cplx> samples, const CircleGrid& grid);
cplx integrate_regular(const std::function<cplx(cplx)>& density, const CircleGrid& grid);

/// Principal value (1/2pi) \oint density(eta) d eta / (eta - xi) for xi on the
/// grid's circle, by the discrete rule
///   (i/(2(2N+1))) sum_j density(eta_j) * [1 + 2i sin(N(t-t_j)/2) sin((N+1)(t-t_j)/2) / sin((t-t_j)/2)]
/// with the j-term bracket replaced by its limit 1 when t coincides with a
/// node.
cplx integrate_singular(std::span<const cplx> samples, const CircleGrid& grid, cplx xi);
cplx integrate_singular(const std::function<cplx(cplx)>& density, const CircleGrid& grid, cplx xi);

}  // namespace incmap
