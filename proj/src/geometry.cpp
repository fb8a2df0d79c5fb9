#include "incmap/geometry.hpp"

#include <cmath>
#include <sstream>

namespace incmap {

namespace {

// Scale-aware "is this denominator a pole" test.
bool near_zero(cplx denom, double scale) { return std::abs(denom) < 1e-13 * (1.0 + scale); }

}  // namespace

MoebiusMap::MoebiusMap(cplx a, cplx b, cplx c, cplx d) : a_(a), b_(b), c_(c), d_(d) {
  const cplx coeffs[4] = {a, b, c, d};
  int imax = 0;
  double mmax = std::abs(coeffs[0]);
  for (int i = 1; i < 4; ++i) {
    double m = std::abs(coeffs[i]);
    if (m > mmax) {
      mmax = m;
      imax = i;
    }
  }
  if (mmax == 0.0) throw degenerate_map_error("all Moebius coefficients vanish");
  const cplx s = coeffs[imax];
  a_ = a / s;
  b_ = b / s;
  c_ = c / s;
  d_ = d / s;
  if (std::abs(determinant()) < 1e-14)
    throw degenerate_map_error("degenerate Moebius map: a*d - b*c = 0");
}

cplx MoebiusMap::operator()(cplx z) const {
  const cplx denom = c_ * z + d_;
  if (near_zero(denom, std::abs(z))) throw pole_error("Moebius map evaluated at its pole");
  return (a_ * z + b_) / denom;
}

ExtComplex MoebiusMap::apply(ExtComplex z) const {
  if (z.infinite) {
    if (std::abs(c_) < 1e-300) return ExtComplex::infinity();
    return ExtComplex::finite(a_ / c_);
  }
  const cplx denom = c_ * z.value + d_;
  if (near_zero(denom, std::abs(z.value))) return ExtComplex::infinity();
  return ExtComplex::finite((a_ * z.value + b_) / denom);
}

bool MoebiusMap::approx_equal(const MoebiusMap& other, double tol) const {
  return std::abs(a_ - other.a_) <= tol && std::abs(b_ - other.b_) <= tol &&
         std::abs(c_ - other.c_) <= tol && std::abs(d_ - other.d_) <= tol;
}

cplx ReflectionMap::operator()(cplx z) const {
  const cplx denom = std::conj(z) - std::conj(circle_.center);
  if (near_zero(denom, std::abs(z)))
    throw pole_error("reflection evaluated at the circle center");
  return circle_.center + circle_.radius * circle_.radius / denom;
}

ExtComplex ReflectionMap::apply(ExtComplex z) const {
  if (z.infinite) return ExtComplex::finite(circle_.center);
  const cplx denom = std::conj(z.value) - std::conj(circle_.center);
  if (near_zero(denom, std::abs(z.value))) return ExtComplex::infinity();
  return ExtComplex::finite(circle_.center + circle_.radius * circle_.radius / denom);
}

MoebiusMap compose_reflection_pair(const ReflectionMap& ta, const ReflectionMap& tb) {
  // Ta acts as Ma on conj(z), Tb as Mb; Ta(Tb(z)) acts holomorphically on z
  // with matrix Ma * conj(Mb).
  const cplx a = ta.ma() * std::conj(tb.ma()) + ta.mb() * std::conj(tb.mc());
  const cplx b = ta.ma() * std::conj(tb.mb()) + ta.mb() * std::conj(tb.md());
  const cplx c = ta.mc() * std::conj(tb.ma()) + ta.md() * std::conj(tb.mc());
  const cplx d = ta.mc() * std::conj(tb.mb()) + ta.md() * std::conj(tb.md());
  return MoebiusMap(a, b, c, d);
}

CircularDomain::CircularDomain(std::vector<Circle> circles, double separation_tol)
    : circles_(std::move(circles)) {
  if (circles_.empty()) throw empty_domain_error("domain needs at least one circle");
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double gap =
          std::abs(circles_[i].center - circles_[j].center) - circles_[i].radius - circles_[j].radius;
      if (gap <= separation_tol) {
        std::ostringstream msg;
        msg << "circles " << i << " and " << j << " are not exterior-disjoint (gap " << gap << ")";
        throw invalid_domain_error(msg.str());
      }
    }
  }
  const bool unit_at_origin =
      std::abs(circles_[0].center) < 1e-12 && std::abs(circles_[0].radius - 1.0) < 1e-12;
  const bool second_real = n < 2 || std::abs(circles_[1].center.imag()) < 1e-12;
  if (!unit_at_origin || !second_real) {
    notice_ =
        "configuration is not in the conventional normalization "
        "(circle 0 unit at the origin, center of circle 1 real); proceeding anyway";
  }
}

bool CircularDomain::in_exterior(cplx z) const {
  for (const Circle& c : circles_)
    if (std::abs(z - c.center) <= c.radius) return false;
  return true;
}

CircularDomain validate_domain(std::vector<Circle> circles, double separation_tol) {
  return CircularDomain(std::move(circles), separation_tol);
}

}  // namespace incmap
