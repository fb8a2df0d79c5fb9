#include "incmap/kernel.hpp"

#include <cmath>

namespace incmap {

KernelContext::KernelContext(const SchottkyGroup& group, cplx base_point)
    : group_(&group), base_point_(base_point) {
  const CircularDomain& dom = group.domain();
  for (const Circle& c : dom.circles())
    if (std::abs(base_point - c.center) <= c.radius)
      throw invalid_parameters_error("base point zeta_* must lie outside every circle");

  base_orbit_.reserve(group.size());
  for (const auto& e : group.elements()) base_orbit_.push_back(e.map(base_point_));

  const int n = dom.size();
  for (int j = 1; j < n; ++j) {
    const MoebiusMap sigma_j =
        compose_reflection_pair(dom.reflection(j), dom.reflection(0));
    const cplx image = sigma_j(base_point_);
    generator_images_.push_back(image);
    generator_idx_.push_back(group.find_word({j, 0}));
    chi_tables_.push_back(table(image));
  }
}

cplx KernelContext::default_base_point(const CircularDomain& domain) {
  if (domain.in_exterior(0.0)) return 0.0;
  cplx p{};
  for (const Circle& c : domain.circles()) p += c.center;
  p /= static_cast<double>(domain.size());
  for (int iter = 0; iter < 100 && !domain.in_exterior(p); ++iter) {
    for (const Circle& c : domain.circles()) {
      if (std::abs(p - c.center) <= c.radius) {
        cplx dir = p - c.center;
        if (std::abs(dir) < 1e-12) dir = 1.0;
        p = c.center + (1.5 * c.radius) * dir / std::abs(dir);
        break;
      }
    }
  }
  if (!domain.in_exterior(p)) {
    double r = 0.0;
    for (const Circle& c : domain.circles()) r = std::max(r, std::abs(c.center) + c.radius);
    p = r + 1.0;
  }
  return p;
}

KernelTable KernelContext::make_table(cplx orbit_seed, std::optional<std::size_t> snap_index,
                                      std::optional<cplx> snap_value, bool drop_snapped) const {
  KernelTable t;
  t.pairs.reserve(group_->size());
  const auto& elems = group_->elements();
  for (std::size_t k = 0; k < elems.size(); ++k) {
    cplx a;
    if (snap_index && *snap_index == k) {
      if (drop_snapped) {
        t.pairs.push_back(base_orbit_[k], base_orbit_[k]);  // pair cancels
        t.extra_poles.push_back(base_orbit_[k]);
        continue;
      }
      a = *snap_value;
    } else {
      const ExtComplex img = elems[k].map.apply(ExtComplex::finite(orbit_seed));
      if (img.infinite) {
        // 1/(eta - inf) term vanishes; keep the base-orbit pole alone.
        t.pairs.push_back(base_orbit_[k], base_orbit_[k]);
        t.extra_poles.push_back(base_orbit_[k]);
        continue;
      }
      a = img.value;
    }
    t.pairs.push_back(a, base_orbit_[k]);
  }
  return t;
}

KernelTable KernelContext::table(cplx zeta) const {
  return make_table(zeta, std::nullopt, std::nullopt, false);
}

KernelTable KernelContext::regular_table(cplx zeta) const {
  return make_table(zeta, 0, std::nullopt, true);
}

KernelTable KernelContext::reflected_table(cplx xi, int j, bool singular) const {
  const CircularDomain& dom = group_->domain();
  if (j < 0 || j >= dom.size()) throw invalid_parameters_error("circle index out of range");
  const cplx seed = dom.reflection(0)(xi);  // T_0(xi); equals xi on circle 0

  std::size_t snap;
  if (j == 0) {
    snap = 0;  // identity term carries the singularity at xi
  } else {
    snap = generator_idx_[static_cast<std::size_t>(j - 1)];
    if (snap == SchottkyGroup::npos) {
      // sigma_j not enumerated (level-0 truncation): append its pair so the
      // reflected kernel keeps its singular structure.
      KernelTable t = make_table(seed, std::nullopt, std::nullopt, false);
      const cplx b = generator_images_[static_cast<std::size_t>(j - 1)];
      if (singular)
        t.pairs.push_back(xi, b);
      else
        t.extra_poles.push_back(b);
      return t;
    }
  }
  return make_table(seed, snap, xi, !singular);
}

cplx KernelContext::eval(const KernelTable& t, cplx eta) const {
  simd::PairSumResult r = simd::orbit_pair_sum(eta, t.pairs);
  cplx sum = r.sum;
  double min_d = r.min_dist_sq;
  for (cplx p : t.extra_poles) {
    const cplx d = eta - p;
    min_d = std::min(min_d, std::norm(d));
    sum -= 1.0 / d;
  }
  if (min_d < 1e-26) throw near_pole_error("kernel evaluated within 1e-13 of an orbit pole");
  return sum;
}

cplx KernelContext::chi(int j, cplx eta) const { return eval(chi_table(j), eta); }

const KernelTable& KernelContext::chi_table(int j) const {
  if (j < 1 || j >= group_->domain().size())
    throw invalid_parameters_error("generator index must be in 1..n-1");
  return chi_tables_[static_cast<std::size_t>(j - 1)];
}

cplx KernelContext::generator_base_image(int j) const {
  if (j < 1 || j >= group_->domain().size())
    throw invalid_parameters_error("generator index must be in 1..n-1");
  return generator_images_[static_cast<std::size_t>(j - 1)];
}

}  // namespace incmap
