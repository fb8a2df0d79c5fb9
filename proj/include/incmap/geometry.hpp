#pragma once

#include <complex>
#include <string>
#include <vector>

#include "incmap/errors.hpp"

namespace incmap {

using cplx = std::complex<double>;

/// A point of the extended plane. Group elements legitimately move finite
/// points to poles during enumeration, so infinity is a value, not an error.
struct ExtComplex {
  cplx value{};
  bool infinite = false;

  static ExtComplex finite(cplx v) { return {v, false}; }
  static ExtComplex infinity() { return {cplx{}, true}; }
};

struct Circle {
  cplx center;
  double radius;

  Circle(cplx c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) throw invalid_parameters_error("circle radius must be positive");
  }

  bool contains(cplx z) const { return std::abs(z - center) < radius; }
  cplx point(double theta) const { return center + radius * std::polar(1.0, theta); }
};

/// Holomorphic linear fractional map (a z + b)/(c z + d), stored with the
/// largest-modulus coefficient scaled to exactly 1 so equality tests and the
/// degeneracy check are meaningful.
class MoebiusMap {
 public:
  MoebiusMap() : a_(1.0), b_(0.0), c_(0.0), d_(1.0) {}
  MoebiusMap(cplx a, cplx b, cplx c, cplx d);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  cplx c() const { return c_; }
  cplx d() const { return d_; }

  cplx determinant() const { return a_ * d_ - b_ * c_; }

  /// Throws pole_error near the pole -d/c.
  cplx operator()(cplx z) const;
  ExtComplex apply(ExtComplex z) const;

  /// this ∘ other (apply other first).
  MoebiusMap compose(const MoebiusMap& other) const {
    return MoebiusMap(a_ * other.a_ + b_ * other.c_, a_ * other.b_ + b_ * other.d_,
                      c_ * other.a_ + d_ * other.c_, c_ * other.b_ + d_ * other.d_);
  }

  MoebiusMap inverse() const { return MoebiusMap(d_, -b_, -c_, a_); }

  bool approx_equal(const MoebiusMap& other, double tol = 1e-12) const;
  bool is_identity(double tol = 1e-12) const { return approx_equal(MoebiusMap(), tol); }

 private:
  cplx a_, b_, c_, d_;
};

/// Anticonformal inversion in a circle: z -> center + r^2/conj(z - center).
/// An involution fixing its circle pointwise.
class ReflectionMap {
 public:
  explicit ReflectionMap(Circle c) : circle_(c) {}

  const Circle& circle() const { return circle_; }

  cplx operator()(cplx z) const;
  ExtComplex apply(ExtComplex z) const;

  // Coefficients of the 2x2 matrix acting on conj(z):
  // T(z) = (ma*conj(z) + mb)/(mc*conj(z) + md).
  cplx ma() const { return circle_.center; }
  cplx mb() const {
    return circle_.radius * circle_.radius - std::norm(circle_.center);
  }
  cplx mc() const { return 1.0; }
  cplx md() const { return -std::conj(circle_.center); }

 private:
  Circle circle_;
};

/// Composite Ta ∘ Tb of two reflections: the holomorphic map with matrix
/// Ma * conj(Mb).
MoebiusMap compose_reflection_pair(const ReflectionMap& ta, const ReflectionMap& tb);

/// Exterior-disjoint circles bounding the parametric domain. Construction
/// rejects overlapping or tangent circles (within a separation tolerance).
class CircularDomain {
 public:
  explicit CircularDomain(std::vector<Circle> circles, double separation_tol = 1e-9);

  int size() const { return static_cast<int>(circles_.size()); }
  const Circle& circle(int j) const { return circles_[static_cast<std::size_t>(j)]; }
  const std::vector<Circle>& circles() const { return circles_; }
  ReflectionMap reflection(int j) const { return ReflectionMap(circle(j)); }

  /// True if z lies strictly outside every circle.
  bool in_exterior(cplx z) const;

  /// Empty when the conventional normalization (unit circle 0 at the origin,
  /// center of circle 1 real) holds; otherwise a one-line notice.
  const std::string& normalization_notice() const { return notice_; }

 private:
  std::vector<Circle> circles_;
  std::string notice_;
};

CircularDomain validate_domain(std::vector<Circle> circles, double separation_tol = 1e-9);

}  // namespace incmap
