#pragma once

#include <utility>

#include "incmap/rh.hpp"

namespace incmap {

struct ContourSample {
  double theta;  // angle on the parametric circle, in [0, 2*pi)
  cplx z;        // physical-plane image omega(center + r e^{i theta})
};

/// Sampled closed image L_j = omega(circle j).
struct InclusionContour {
  int index = 0;
  std::vector<ContourSample> samples;
  bool closed = true;
};

/// Physical boundary point omega(xi) for xi on circle j.
cplx omega_boundary(const Solver& solver, cplx xi, int j);

/// M equiangular samples of omega per circle; with M = 2N+1 the angles land
/// exactly on the quadrature nodes.
std::vector<InclusionContour> sample_contours(const Solver& solver, int samples_per_contour);

struct OverlapReport {
  bool any = false;
  std::vector<std::pair<int, int>> pairs;      // intersecting or nested contour pairs
  std::vector<int> self_intersecting;          // non-univalence warnings
};

/// Pairwise closed-polyline crossing and containment test.
OverlapReport detect_overlap(const std::vector<InclusionContour>& contours);

/// Analytic single-inclusion solution: omega(e^{i theta}) =
/// c_{-1}(e^{i theta} + delta e^{-i theta}) + gamma with
/// delta = (2 kappa_0 tau_inf - (kappa_0 + 1) tau) / ((1 - kappa_0) conj(tau)).
struct EllipseOracle {
  double kappa0;
  cplx tau, tau_inf;
  cplx c_minus1;
  cplx gamma;
  cplx delta;
  bool degenerate;  // |delta| >= 1: segment or non-univalent image
};

EllipseOracle make_ellipse_oracle(double kappa0, cplx tau, cplx tau_inf, cplx c_minus1,
                                  cplx gamma = cplx{});
cplx ellipse_point(const EllipseOracle& oracle, double theta);

/// Sup-norm diagnostics of the boundary conditions and the function-theoretic
/// identities, evaluated on the cached grids plus pseudo-random spot points.
struct ResidualReport {
  double im_F = 0.0;          // sup |Im F - a_j|
  double physical_bc = 0.0;   // sup |Re(conj(tau) omega) - lambda_j (Re F - d_j')|
  double symmetry = 0.0;      // sup defect of conj(Phi_m(T_j(zeta))) = Phi_m(zeta)
  double automorphicity = 0.0;  // sup defect of Phi_m(sigma_j(zeta)) = Phi_m(zeta)
  std::vector<std::vector<double>> residue_defects;  // |chi residue defects|, row l
  bool overlap = false;
  std::vector<std::pair<int, int>> overlap_pairs;
  std::vector<int> self_intersecting;
};

ResidualReport residual_report(const Solver& solver, const std::vector<InclusionContour>& contours);

/// Ratio of the smallest to the largest directional width of the sampled
/// contour (1 for a disk, -> 0 for a segment).
double caliper_width_ratio(const InclusionContour& contour, int directions = 180);

/// Best similarity fit z2 ~ alpha*z1 + beta in the least-squares sense;
/// returns the normalized RMS residual.
double procrustes_residual(const std::vector<cplx>& z1, const std::vector<cplx>& z2);

}  // namespace incmap
