#pragma once

#include <optional>
#include <vector>

#include "incmap/schottky.hpp"
#include "incmap/simd_kernels.hpp"

namespace incmap {

/// Precomputed pole pairs for evaluating the truncated quasiautomorphic
/// Cauchy kernel at many eta for one fixed first argument. Pair k holds
/// (sigma_k(zeta), sigma_k(zeta_*)) in enumeration order; an optional lone
/// pole contributes an extra -1/(eta - pole).
struct KernelTable {
  simd::PoleArrays pairs;
  std::vector<cplx> extra_poles;  // each contributes -1/(eta - pole)
};

/// Truncated series evaluation of the kernel
///   K(zeta, eta) = sum_sigma [ 1/(eta - sigma(zeta)) - 1/(eta - sigma(zeta_*)) ],
/// its regular part, the quasiautomorphic shifts chi, and the reflected
/// kernel needed on the circles.
class KernelContext {
 public:
  KernelContext(const SchottkyGroup& group, cplx base_point);

  /// zeta_* choice: 0 when exterior to all circles, else the centroid of the
  /// centers pushed outside.
  static cplx default_base_point(const CircularDomain& domain);

  const SchottkyGroup& group() const { return *group_; }
  cplx base_point() const { return base_point_; }

  /// Orbit table of zeta: the full kernel K(zeta, .).
  KernelTable table(cplx zeta) const;

  /// Table for the regular part K(zeta, .) - 1/(eta - zeta).
  KernelTable regular_table(cplx zeta) const;

  /// Table for K(T_0(xi), .) with xi on circle j. The element mapping back
  /// onto xi (identity for j = 0, sigma_j for j >= 1) has its pole snapped to
  /// exactly xi; with singular=false that pole is removed, leaving the
  /// regular part K(T_0(xi), .) - 1/(eta - xi).
  KernelTable reflected_table(cplx xi, int j, bool singular = true) const;

  /// Evaluate a table at eta. Throws near_pole_error within 1e-13 of a pole.
  cplx eval(const KernelTable& t, cplx eta) const;

  cplx cauchy_kernel(cplx zeta, cplx eta) const { return eval(table(zeta), eta); }
  cplx kernel_regular_part(cplx zeta, cplx eta) const { return eval(regular_table(zeta), eta); }
  cplx reflected_kernel(cplx xi, int j, cplx eta) const {
    return eval(reflected_table(xi, j), eta);
  }

  /// chi_{sigma_j}(eta) = K(sigma_j(zeta_*), eta) for generator index
  /// 1 <= j <= n-1.
  cplx chi(int j, cplx eta) const;
  const KernelTable& chi_table(int j) const;

  /// sigma_j = T_j T_0 applied to the base point (lies inside circle j).
  cplx generator_base_image(int j) const;

 private:
  KernelTable make_table(cplx orbit_seed, std::optional<std::size_t> snap_index,
                         std::optional<cplx> snap_value, bool drop_snapped) const;

  const SchottkyGroup* group_;
  cplx base_point_;
  std::vector<cplx> base_orbit_;           // sigma_k(zeta_*), enumeration order
  std::vector<KernelTable> chi_tables_;    // index j-1 for generators 1..n-1
  std::vector<cplx> generator_images_;     // sigma_j(zeta_*)
  std::vector<std::size_t> generator_idx_; // element index of word {j, 0}
};

}  // namespace incmap
