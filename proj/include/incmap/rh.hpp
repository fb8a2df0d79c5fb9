#pragma once

#include <memory>
#include <optional>

#include "incmap/kernel.hpp"
#include "incmap/quadrature.hpp"

namespace incmap {

/// Loading data in units of the matrix shear modulus: tau = tau/mu,
/// tau_inf = tau^inf/mu, and the contrast ratios kappa_j = mu_j/mu.
struct LoadingParameters {
  cplx tau;
  cplx tau_inf;
  std::vector<double> kappa;

  void validate(int n) const;
  double lambda(int j) const {
    const double k = kappa[static_cast<std::size_t>(j)];
    return k / (1.0 - k);
  }
};

enum class GaugeMode { explicit_values, zero, antisymmetric };

/// Freely choosable parameters of the map family.
struct MapGauge {
  cplx c_minus1{1.0, 0.0};
  double a0 = 0.0;
  double d0_tilde = 0.0;
  GaugeMode mode = GaugeMode::zero;
  std::optional<cplx> zeta_star;  // defaulted from the domain when absent
};

struct Numerics {
  int max_level = 4;
  int quadrature_n = 64;
  int samples_per_contour = 257;
  double hard_residual_ceiling = 1e-4;
  double convergence_threshold = 0.75;
  std::size_t element_cap = 1'000'000;
};

/// Solvability constants of the two Riemann-Hilbert problems.
struct RHConstants {
  std::vector<double> a;
  std::vector<double> d_tilde;
  std::vector<double> d_prime;  // d_j' = (kappa_j - 1)/kappa_j * d~_j
};

/// Immutable bundle of everything the solves need: validated domain,
/// enumerated group, kernel context, and per-circle quadrature grids.
class ProblemSetup {
 public:
  ProblemSetup(CircularDomain domain, LoadingParameters loading, MapGauge gauge,
               Numerics numerics);

  ProblemSetup(const ProblemSetup&) = delete;
  ProblemSetup& operator=(const ProblemSetup&) = delete;

  int n() const { return domain_.size(); }
  const CircularDomain& domain() const { return domain_; }
  const LoadingParameters& loading() const { return loading_; }
  const MapGauge& gauge() const { return gauge_; }
  const Numerics& numerics() const { return numerics_; }
  const SchottkyGroup& group() const { return group_; }
  const KernelContext& kernel() const { return *kernel_; }
  const CircleGrid& grid(int j) const { return grids_[static_cast<std::size_t>(j)]; }
  const std::vector<CircleGrid>& grids() const { return grids_; }

  /// c = (conj(tau_inf) - conj(tau)) * c_{-1}, per mu.
  cplx c() const { return c_; }

 private:
  CircularDomain domain_;
  LoadingParameters loading_;
  MapGauge gauge_;
  Numerics numerics_;
  SchottkyGroup group_;
  std::unique_ptr<KernelContext> kernel_;
  std::vector<CircleGrid> grids_;
  cplx c_;
};

/// Consecutive solution of the two Riemann-Hilbert problems. Construction
/// computes the constants a_j and d~_j and caches all boundary samples on the
/// quadrature grids; the evaluators below work at arbitrary on-circle points.
class Solver {
 public:
  explicit Solver(const ProblemSetup& setup);

  const ProblemSetup& setup() const { return *setup_; }
  const RHConstants& constants() const { return constants_; }

  // --- boundary traces (xi on circle j) ---

  /// Principal value of Psi_1 on the boundary.
  cplx psi1_boundary(cplx xi, int j) const;
  /// Principal value of Psi_1(T_0(xi)) via the reflected kernel.
  cplx psi1_reflected_boundary(cplx xi, int j) const;
  /// F(xi) = c xi - i[Im(c xi) - a_j] + Psi_1(xi) + conj(Psi_1(T_0(xi))).
  cplx boundary_F(cplx xi, int j) const;
  /// g2_circ = Re(kappa_j/(kappa_j - 1) F(xi) + conj(tau) c_{-1} xi).
  double g2_circ(cplx xi, int j) const;
  cplx psi2_boundary(cplx xi, int j) const;
  cplx psi2_reflected_boundary(cplx xi, int j) const;
  /// omega(xi) = c_{-1} xi - (1/conj(tau)) [g2_circ - d~_j + i Psi_2 + i conj(Psi_2(T_0(xi)))].
  cplx omega_boundary(cplx xi, int j) const;

  // --- off-contour values ---

  cplx psi1(cplx zeta) const;
  cplx psi2(cplx zeta) const;
  /// Phi_1 = Psi_1(zeta) + conj(Psi_1(T_0(zeta))).
  cplx phi1(cplx zeta) const;
  cplx phi2(cplx zeta) const;

  // --- cached node samples ---

  const std::vector<cplx>& F_nodes(int j) const { return F_nodes_[static_cast<std::size_t>(j)]; }
  const std::vector<double>& g2_nodes(int j) const {
    return g2_nodes_[static_cast<std::size_t>(j)];
  }
  const std::vector<cplx>& omega_nodes(int j) const {
    return omega_nodes_[static_cast<std::size_t>(j)];
  }

  /// Truncation-quality gauge: integral of chi_{sigma_j} over circle l minus
  /// its exact-group residue value (-2*pi*i for l = 0, 2*pi*i*delta_lj else).
  /// Row l, column j-1.
  std::vector<std::vector<cplx>> residue_identity_defects() const;

 private:
  enum class KernelSide { direct, reflected };

  cplx pv_boundary(const std::vector<std::vector<cplx>>& densities, cplx xi, int j,
                   KernelSide side) const;
  cplx off_contour(const std::vector<std::vector<cplx>>& densities, cplx zeta) const;
  void check_off_contour(cplx zeta) const;

  const ProblemSetup* setup_;
  RHConstants constants_;
  std::vector<std::vector<std::vector<cplx>>> chi_nodes_;  // [j-1][l][m]
  std::vector<std::vector<cplx>> rho1_;                    // Im(c eta) - a_l
  std::vector<std::vector<cplx>> rho2_;                    // g2_circ - d~_l
  std::vector<std::vector<cplx>> psi1_nodes_, psi1_refl_nodes_;
  std::vector<std::vector<cplx>> F_nodes_;
  std::vector<std::vector<double>> g2_nodes_;
  std::vector<std::vector<cplx>> omega_nodes_;
};

}  // namespace incmap
