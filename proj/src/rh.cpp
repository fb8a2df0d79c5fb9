#include "incmap/rh.hpp"

#include <cmath>
#include <numbers>

namespace incmap {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr cplx I{0.0, 1.0};
}  // namespace

void LoadingParameters::validate(int n) const {
  if (static_cast<int>(kappa.size()) != n)
    throw invalid_parameters_error("kappa must list one contrast ratio per circle");
  for (double k : kappa)
    if (!(k > 0.0) || k == 1.0)
      throw invalid_parameters_error("kappa_j must be positive and different from 1");
  if (std::abs(tau) == 0.0) throw invalid_parameters_error("tau must be nonzero");
}

ProblemSetup::ProblemSetup(CircularDomain domain, LoadingParameters loading, MapGauge gauge,
                           Numerics numerics)
    : domain_(std::move(domain)),
      loading_(std::move(loading)),
      gauge_(gauge),
      numerics_(numerics),
      group_(SchottkyGroup::enumerate(domain_, numerics.max_level, numerics.element_cap)) {
  loading_.validate(domain_.size());
  if (std::abs(gauge_.c_minus1) == 0.0)
    throw invalid_parameters_error("c_minus1 must be nonzero");
  if (gauge_.mode == GaugeMode::antisymmetric && domain_.size() != 2)
    throw invalid_parameters_error("antisymmetric gauge requires exactly two circles");
  const cplx zs = gauge_.zeta_star ? *gauge_.zeta_star : KernelContext::default_base_point(domain_);
  kernel_ = std::make_unique<KernelContext>(group_, zs);
  grids_.reserve(static_cast<std::size_t>(domain_.size()));
  for (const Circle& c : domain_.circles()) grids_.emplace_back(c, numerics_.quadrature_n);
  c_ = (std::conj(loading_.tau_inf) - std::conj(loading_.tau)) * gauge_.c_minus1;
}

Solver::Solver(const ProblemSetup& setup) : setup_(&setup) {
  const int n = setup.n();
  const cplx c = setup.c();
  const KernelContext& K = setup.kernel();

  // chi_{sigma_j} sampled at every grid node.
  chi_nodes_.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int j = 1; j < n; ++j) {
    auto& per_circle = chi_nodes_[static_cast<std::size_t>(j - 1)];
    per_circle.resize(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) {
      const auto& nodes = setup.grid(l).nodes();
      auto& vals = per_circle[static_cast<std::size_t>(l)];
      vals.reserve(nodes.size());
      for (cplx eta : nodes) vals.push_back(K.eval(K.chi_table(j), eta));
    }
  }

  // Constants a_j: corrections from the integrals of Im(c eta) * chi.
  std::vector<double> delta_a(static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j < n; ++j) {
    cplx acc{};
    for (int l = 0; l < n; ++l) {
      const auto& nodes = setup.grid(l).nodes();
      std::vector<cplx> samples(nodes.size());
      for (std::size_t m = 0; m < nodes.size(); ++m)
        samples[m] = std::imag(c * nodes[m]) *
                     chi_nodes_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l)][m];
      acc += integrate_regular(samples, setup.grid(l));
    }
    delta_a[static_cast<std::size_t>(j)] = std::imag(acc) / two_pi;
  }

  const MapGauge& gauge = setup.gauge();
  double a0 = 0.0;
  switch (gauge.mode) {
    case GaugeMode::zero:
      a0 = 0.0;
      break;
    case GaugeMode::explicit_values:
      a0 = gauge.a0;
      break;
    case GaugeMode::antisymmetric:
      a0 = -0.5 * delta_a[1];
      break;
  }
  constants_.a.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) constants_.a[static_cast<std::size_t>(j)] = a0 + delta_a[static_cast<std::size_t>(j)];

  // Problem-1 densities and boundary traces at the nodes.
  rho1_.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const auto& nodes = setup.grid(l).nodes();
    auto& rho = rho1_[static_cast<std::size_t>(l)];
    rho.resize(nodes.size());
    for (std::size_t m = 0; m < nodes.size(); ++m)
      rho[m] = std::imag(c * nodes[m]) - constants_.a[static_cast<std::size_t>(l)];
  }

  psi1_nodes_.resize(static_cast<std::size_t>(n));
  psi1_refl_nodes_.resize(static_cast<std::size_t>(n));
  F_nodes_.resize(static_cast<std::size_t>(n));
  g2_nodes_.resize(static_cast<std::size_t>(n));
  const cplx tbar = std::conj(setup.loading().tau);
  for (int j = 0; j < n; ++j) {
    const auto& nodes = setup.grid(j).nodes();
    auto& p1 = psi1_nodes_[static_cast<std::size_t>(j)];
    auto& p1r = psi1_refl_nodes_[static_cast<std::size_t>(j)];
    auto& F = F_nodes_[static_cast<std::size_t>(j)];
    auto& g2 = g2_nodes_[static_cast<std::size_t>(j)];
    p1.resize(nodes.size());
    p1r.resize(nodes.size());
    F.resize(nodes.size());
    g2.resize(nodes.size());
    const double kj = setup.loading().kappa[static_cast<std::size_t>(j)];
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      const cplx xi = nodes[m];
      p1[m] = pv_boundary(rho1_, xi, j, KernelSide::direct);
      p1r[m] = pv_boundary(rho1_, xi, j, KernelSide::reflected);
      F[m] = c * xi - I * (std::imag(c * xi) - constants_.a[static_cast<std::size_t>(j)]) +
             p1[m] + std::conj(p1r[m]);
      g2[m] = std::real(kj / (kj - 1.0) * F[m] + tbar * gauge.c_minus1 * xi);
    }
  }

  // Constants d~_j from the second solvability condition.
  std::vector<double> delta_d(static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j < n; ++j) {
    cplx acc{};
    for (int l = 0; l < n; ++l) {
      const auto& nodes = setup.grid(l).nodes();
      std::vector<cplx> samples(nodes.size());
      for (std::size_t m = 0; m < nodes.size(); ++m)
        samples[m] = g2_nodes_[static_cast<std::size_t>(l)][m] *
                     chi_nodes_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l)][m];
      acc += integrate_regular(samples, setup.grid(l));
    }
    delta_d[static_cast<std::size_t>(j)] = std::imag(acc) / two_pi;
  }
  double d0 = 0.0;
  switch (gauge.mode) {
    case GaugeMode::zero:
      d0 = 0.0;
      break;
    case GaugeMode::explicit_values:
      d0 = gauge.d0_tilde;
      break;
    case GaugeMode::antisymmetric:
      d0 = -0.5 * delta_d[1];
      break;
  }
  constants_.d_tilde.resize(static_cast<std::size_t>(n));
  constants_.d_prime.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double dj = d0 + delta_d[static_cast<std::size_t>(j)];
    const double kj = setup.loading().kappa[static_cast<std::size_t>(j)];
    constants_.d_tilde[static_cast<std::size_t>(j)] = dj;
    constants_.d_prime[static_cast<std::size_t>(j)] = (kj - 1.0) / kj * dj;
  }

  // Problem-2 densities and the map samples at the nodes.
  rho2_.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const auto& g2 = g2_nodes_[static_cast<std::size_t>(l)];
    auto& rho = rho2_[static_cast<std::size_t>(l)];
    rho.resize(g2.size());
    for (std::size_t m = 0; m < g2.size(); ++m)
      rho[m] = g2[m] - constants_.d_tilde[static_cast<std::size_t>(l)];
  }

  omega_nodes_.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const auto& nodes = setup.grid(j).nodes();
    auto& om = omega_nodes_[static_cast<std::size_t>(j)];
    om.resize(nodes.size());
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      const cplx xi = nodes[m];
      const cplx p2 = pv_boundary(rho2_, xi, j, KernelSide::direct);
      const cplx p2r = pv_boundary(rho2_, xi, j, KernelSide::reflected);
      om[m] = gauge.c_minus1 * xi -
              (rho2_[static_cast<std::size_t>(j)][m] + I * p2 + I * std::conj(p2r)) / tbar;
    }
  }
}

cplx Solver::pv_boundary(const std::vector<std::vector<cplx>>& densities, cplx xi, int j,
                         KernelSide side) const {
  const ProblemSetup& s = *setup_;
  const KernelContext& K = s.kernel();
  const int n = s.n();

  const KernelTable full = side == KernelSide::direct ? K.table(xi) : K.reflected_table(xi, j, true);
  const KernelTable reg =
      side == KernelSide::direct ? K.regular_table(xi) : K.reflected_table(xi, j, false);

  cplx acc = integrate_singular(densities[static_cast<std::size_t>(j)], s.grid(j), xi);
  for (int l = 0; l < n; ++l) {
    const auto& nodes = s.grid(l).nodes();
    const auto& rho = densities[static_cast<std::size_t>(l)];
    std::vector<cplx> samples(nodes.size());
    const KernelTable& t = (l == j) ? reg : full;
    for (std::size_t m = 0; m < nodes.size(); ++m) samples[m] = rho[m] * K.eval(t, nodes[m]);
    acc += integrate_regular(samples, s.grid(l)) / two_pi;
  }
  return acc;
}

void Solver::check_off_contour(cplx zeta) const {
  for (const Circle& c : setup_->domain().circles())
    if (std::abs(std::abs(zeta - c.center) - c.radius) < 1e-10)
      throw off_contour_error(
          "point lies on a boundary circle; use the boundary evaluators");
}

cplx Solver::off_contour(const std::vector<std::vector<cplx>>& densities, cplx zeta) const {
  const ProblemSetup& s = *setup_;
  const KernelContext& K = s.kernel();
  const KernelTable t = K.table(zeta);
  cplx acc{};
  for (int l = 0; l < s.n(); ++l) {
    const auto& nodes = s.grid(l).nodes();
    const auto& rho = densities[static_cast<std::size_t>(l)];
    std::vector<cplx> samples(nodes.size());
    for (std::size_t m = 0; m < nodes.size(); ++m) samples[m] = rho[m] * K.eval(t, nodes[m]);
    acc += integrate_regular(samples, s.grid(l)) / two_pi;
  }
  return acc;
}

cplx Solver::psi1_boundary(cplx xi, int j) const {
  return pv_boundary(rho1_, xi, j, KernelSide::direct);
}

cplx Solver::psi1_reflected_boundary(cplx xi, int j) const {
  return pv_boundary(rho1_, xi, j, KernelSide::reflected);
}

cplx Solver::boundary_F(cplx xi, int j) const {
  const cplx c = setup_->c();
  return c * xi - I * (std::imag(c * xi) - constants_.a[static_cast<std::size_t>(j)]) +
         psi1_boundary(xi, j) + std::conj(psi1_reflected_boundary(xi, j));
}

double Solver::g2_circ(cplx xi, int j) const {
  const double kj = setup_->loading().kappa[static_cast<std::size_t>(j)];
  return std::real(kj / (kj - 1.0) * boundary_F(xi, j) +
                   std::conj(setup_->loading().tau) * setup_->gauge().c_minus1 * xi);
}

cplx Solver::psi2_boundary(cplx xi, int j) const {
  return pv_boundary(rho2_, xi, j, KernelSide::direct);
}

cplx Solver::psi2_reflected_boundary(cplx xi, int j) const {
  return pv_boundary(rho2_, xi, j, KernelSide::reflected);
}

cplx Solver::omega_boundary(cplx xi, int j) const {
  const cplx tbar = std::conj(setup_->loading().tau);
  const double g2 = g2_circ(xi, j);
  return setup_->gauge().c_minus1 * xi -
         (g2 - constants_.d_tilde[static_cast<std::size_t>(j)] + I * psi2_boundary(xi, j) +
          I * std::conj(psi2_reflected_boundary(xi, j))) /
             tbar;
}

cplx Solver::psi1(cplx zeta) const {
  check_off_contour(zeta);
  return off_contour(rho1_, zeta);
}

cplx Solver::psi2(cplx zeta) const {
  check_off_contour(zeta);
  return off_contour(rho2_, zeta);
}

cplx Solver::phi1(cplx zeta) const {
  const cplx mirror = setup_->domain().reflection(0)(zeta);
  return psi1(zeta) + std::conj(psi1(mirror));
}

cplx Solver::phi2(cplx zeta) const {
  const cplx mirror = setup_->domain().reflection(0)(zeta);
  return psi2(zeta) + std::conj(psi2(mirror));
}

std::vector<std::vector<cplx>> Solver::residue_identity_defects() const {
  const ProblemSetup& s = *setup_;
  const int n = s.n();
  std::vector<std::vector<cplx>> defects(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    auto& row = defects[static_cast<std::size_t>(l)];
    row.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
    for (int j = 1; j < n; ++j) {
      const cplx integral = integrate_regular(
          chi_nodes_[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l)], s.grid(l));
      const cplx target = (l == 0) ? cplx(0.0, -two_pi) : (l == j ? cplx(0.0, two_pi) : cplx{});
      row[static_cast<std::size_t>(j - 1)] = integral - target;
    }
  }
  return defects;
}

}  // namespace incmap
