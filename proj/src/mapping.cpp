#include "incmap/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace incmap {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double cross(cplx o, cplx a, cplx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool segments_cross(cplx p1, cplx p2, cplx q1, cplx q2) {
  const double d1 = cross(q1, q2, p1);
  const double d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1);
  const double d4 = cross(p1, p2, q2);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

bool point_in_polygon(cplx p, const std::vector<ContourSample>& poly) {
  bool inside = false;
  const std::size_t m = poly.size();
  for (std::size_t i = 0, j = m - 1; i < m; j = i++) {
    const cplx a = poly[i].z;
    const cplx b = poly[j].z;
    if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
      const double x =
          (b.real() - a.real()) * (p.imag() - a.imag()) / (b.imag() - a.imag()) + a.real();
      if (p.real() < x) inside = !inside;
    }
  }
  return inside;
}

bool contours_cross(const InclusionContour& A, const InclusionContour& B) {
  const std::size_t ma = A.samples.size();
  const std::size_t mb = B.samples.size();
  for (std::size_t i = 0; i < ma; ++i) {
    const cplx p1 = A.samples[i].z;
    const cplx p2 = A.samples[(i + 1) % ma].z;
    for (std::size_t j = 0; j < mb; ++j) {
      if (segments_cross(p1, p2, B.samples[j].z, B.samples[(j + 1) % mb].z)) return true;
    }
  }
  return false;
}

bool self_intersects(const InclusionContour& A) {
  const std::size_t m = A.samples.size();
  for (std::size_t i = 0; i < m; ++i) {
    const cplx p1 = A.samples[i].z;
    const cplx p2 = A.samples[(i + 1) % m].z;
    for (std::size_t j = i + 2; j < m; ++j) {
      if (i == 0 && j == m - 1) continue;  // adjacent through the closure
      if (segments_cross(p1, p2, A.samples[j].z, A.samples[(j + 1) % m].z)) return true;
    }
  }
  return false;
}

}  // namespace

cplx omega_boundary(const Solver& solver, cplx xi, int j) { return solver.omega_boundary(xi, j); }

std::vector<InclusionContour> sample_contours(const Solver& solver, int samples_per_contour) {
  if (samples_per_contour < 16)
    throw invalid_parameters_error("need at least 16 samples per contour");
  const ProblemSetup& s = solver.setup();
  const int n = s.n();
  const int M = samples_per_contour;
  std::vector<InclusionContour> contours;
  contours.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    InclusionContour c;
    c.index = j;
    c.samples.reserve(static_cast<std::size_t>(M));
    const CircleGrid& grid = s.grid(j);
    const bool aligned = M == grid.node_count();
    for (int m = 0; m < M; ++m) {
      const double theta = two_pi * m / M;
      cplx z;
      if (aligned) {
        const int N = grid.N();
        const int idx = m <= N ? m + N : m - N - 1;
        z = solver.omega_nodes(j)[static_cast<std::size_t>(idx)];
      } else {
        z = solver.omega_boundary(s.domain().circle(j).point(theta), j);
      }
      c.samples.push_back({theta, z});
    }
    contours.push_back(std::move(c));
  }
  return contours;
}

OverlapReport detect_overlap(const std::vector<InclusionContour>& contours) {
  OverlapReport rep;
  const std::size_t n = contours.size();
  for (std::size_t i = 0; i < n; ++i)
    if (self_intersects(contours[i])) rep.self_intersecting.push_back(contours[i].index);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool bad = contours_cross(contours[i], contours[j]);
      if (!bad)
        bad = point_in_polygon(contours[j].samples.front().z, contours[i].samples) ||
              point_in_polygon(contours[i].samples.front().z, contours[j].samples);
      if (bad) {
        rep.any = true;
        rep.pairs.emplace_back(contours[i].index, contours[j].index);
      }
    }
  }
  return rep;
}

EllipseOracle make_ellipse_oracle(double kappa0, cplx tau, cplx tau_inf, cplx c_minus1,
                                  cplx gamma) {
  if (kappa0 == 1.0 || !(kappa0 > 0.0))
    throw invalid_parameters_error("kappa0 must be positive and different from 1");
  if (std::abs(tau) == 0.0) throw invalid_parameters_error("tau must be nonzero");
  EllipseOracle o;
  o.kappa0 = kappa0;
  o.tau = tau;
  o.tau_inf = tau_inf;
  o.c_minus1 = c_minus1;
  o.gamma = gamma;
  o.delta = (2.0 * kappa0 * tau_inf - (kappa0 + 1.0) * tau) / ((1.0 - kappa0) * std::conj(tau));
  o.degenerate = std::abs(o.delta) >= 1.0 - 1e-12;
  return o;
}

cplx ellipse_point(const EllipseOracle& oracle, double theta) {
  const cplx e = std::polar(1.0, theta);
  return oracle.c_minus1 * (e + oracle.delta / e) + oracle.gamma;
}

ResidualReport residual_report(const Solver& solver, const std::vector<InclusionContour>& contours) {
  ResidualReport rep;
  const ProblemSetup& s = solver.setup();
  const int n = s.n();
  const RHConstants& k = solver.constants();
  const cplx tbar = std::conj(s.loading().tau);

  for (int j = 0; j < n; ++j) {
    const auto& nodes = s.grid(j).nodes();
    const double aj = k.a[static_cast<std::size_t>(j)];
    const double dpj = k.d_prime[static_cast<std::size_t>(j)];
    const double lj = s.loading().lambda(j);
    for (std::size_t m = 0; m < nodes.size(); ++m) {
      const cplx F = solver.F_nodes(j)[m];
      const cplx om = solver.omega_nodes(j)[m];
      rep.im_F = std::max(rep.im_F, std::abs(std::imag(F) - aj));
      rep.physical_bc =
          std::max(rep.physical_bc, std::abs(std::real(tbar * om) - lj * (std::real(F) - dpj)));
    }
  }

  // Spot points in the exterior for the function-theoretic identities.
  std::vector<cplx> spots;
  for (int j = 0; j < n; ++j) {
    const Circle& c = s.domain().circle(j);
    for (double theta : {0.37, 1.93, 4.41}) {
      const cplx z = c.center + 1.35 * c.radius * std::polar(1.0, theta);
      if (s.domain().in_exterior(z)) spots.push_back(z);
    }
  }

  for (cplx z : spots) {
    try {
      const cplx f1 = solver.phi1(z);
      const cplx f2 = solver.phi2(z);
      for (int j = 1; j < n; ++j) {
        const cplx zr = s.domain().reflection(j)(z);
        rep.symmetry = std::max(rep.symmetry, std::abs(f1 - std::conj(solver.phi1(zr))));
        rep.symmetry = std::max(rep.symmetry, std::abs(f2 - std::conj(solver.phi2(zr))));
        const MoebiusMap sigma =
            compose_reflection_pair(s.domain().reflection(j), s.domain().reflection(0));
        const cplx zs = sigma(z);
        rep.automorphicity = std::max(rep.automorphicity, std::abs(solver.phi1(zs) - f1));
        rep.automorphicity = std::max(rep.automorphicity, std::abs(solver.phi2(zs) - f2));
      }
    } catch (const near_pole_error&) {
      // spot point happened to sit on an orbit pole; skip it
    }
  }

  const auto defects = solver.residue_identity_defects();
  rep.residue_defects.resize(defects.size());
  for (std::size_t l = 0; l < defects.size(); ++l) {
    rep.residue_defects[l].reserve(defects[l].size());
    for (cplx d : defects[l]) rep.residue_defects[l].push_back(std::abs(d));
  }

  const OverlapReport overlap = detect_overlap(contours);
  rep.overlap = overlap.any;
  rep.overlap_pairs = overlap.pairs;
  rep.self_intersecting = overlap.self_intersecting;
  return rep;
}

double caliper_width_ratio(const InclusionContour& contour, int directions) {
  double wmin = std::numeric_limits<double>::infinity();
  double wmax = 0.0;
  for (int k = 0; k < directions; ++k) {
    const double phi = std::numbers::pi * k / directions;
    const cplx dir = std::polar(1.0, -phi);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const ContourSample& sm : contour.samples) {
      const double p = (sm.z * dir).real();
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    wmin = std::min(wmin, hi - lo);
    wmax = std::max(wmax, hi - lo);
  }
  return wmax > 0.0 ? wmin / wmax : 0.0;
}

double procrustes_residual(const std::vector<cplx>& z1, const std::vector<cplx>& z2) {
  if (z1.size() != z2.size() || z1.empty())
    throw invalid_parameters_error("procrustes needs matching nonempty point sets");
  const double m = static_cast<double>(z1.size());
  cplx mu1{}, mu2{};
  for (std::size_t i = 0; i < z1.size(); ++i) {
    mu1 += z1[i];
    mu2 += z2[i];
  }
  mu1 /= m;
  mu2 /= m;
  cplx num{};
  double den = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < z1.size(); ++i) {
    const cplx u = z1[i] - mu1;
    const cplx v = z2[i] - mu2;
    num += std::conj(u) * v;
    den += std::norm(u);
    scale += std::norm(v);
  }
  if (den == 0.0 || scale == 0.0) return 0.0;
  const cplx alpha = num / den;
  double res = 0.0;
  for (std::size_t i = 0; i < z1.size(); ++i)
    res += std::norm((z2[i] - mu2) - alpha * (z1[i] - mu1));
  return std::sqrt(res / m) / std::sqrt(scale / m);
}

}  // namespace incmap
