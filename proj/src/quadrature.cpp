#include "incmap/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace incmap {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

CircleGrid::CircleGrid(Circle circle, int N) : circle_(circle), N_(N) {
  if (N < 1) throw invalid_parameters_error("quadrature N must be >= 1");
  const int m = node_count();
  thetas_.reserve(static_cast<std::size_t>(m));
  nodes_.reserve(static_cast<std::size_t>(m));
  for (int j = -N; j <= N; ++j) {
    const double theta = two_pi * j / m;
    thetas_.push_back(theta);
    nodes_.push_back(circle_.point(theta));
  }
}

double CircleGrid::angle_of(cplx xi, double tol) const {
  const cplx rel = xi - circle_.center;
  if (std::abs(std::abs(rel) - circle_.radius) > tol)
    throw off_contour_error("evaluation point does not lie on the quadrature circle");
  return std::arg(rel);  // (-pi, pi]
}

cplx integrate_regular(std::span<const cplx> samples, const CircleGrid& grid) {
  const int m = grid.node_count();
  if (static_cast<int>(samples.size()) != m)
    throw quadrature_sample_error("sample count does not match the grid");
  cplx acc{};
  for (int j = 0; j < m; ++j) {
    const cplx f = samples[static_cast<std::size_t>(j)];
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
      throw quadrature_sample_error("non-finite density sample");
    // d eta = i r e^{i theta} d theta
    const cplx deta = cplx(0.0, 1.0) * (grid.nodes()[static_cast<std::size_t>(j)] - grid.circle().center);
    acc += f * deta;
  }
  return acc * (two_pi / m);
}

cplx integrate_regular(const std::function<cplx(cplx)>& density, const CircleGrid& grid) {
  std::vector<cplx> samples;
  samples.reserve(static_cast<std::size_t>(grid.node_count()));
  for (cplx eta : grid.nodes()) samples.push_back(density(eta));
  return integrate_regular(samples, grid);
}

cplx integrate_singular(std::span<const cplx> samples, const CircleGrid& grid, cplx xi) {
  const int m = grid.node_count();
  if (static_cast<int>(samples.size()) != m)
    throw quadrature_sample_error("sample count does not match the grid");
  const int N = grid.N();
  const double theta = grid.angle_of(xi);
  cplx acc{};
  for (int j = 0; j < m; ++j) {
    const cplx f = samples[static_cast<std::size_t>(j)];
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag()))
      throw quadrature_sample_error("non-finite density sample");
    // Angle difference mod 2*pi; the bracket is 2*pi-periodic.
    const double d = std::remainder(theta - grid.thetas()[static_cast<std::size_t>(j)], two_pi);
    const double sh = std::sin(0.5 * d);
    cplx bracket;
    if (std::abs(sh) < 1e-12) {
      bracket = 1.0;  // limit value at a coincident node
    } else {
      bracket = 1.0 + cplx(0.0, 2.0) * std::sin(0.5 * N * d) * std::sin(0.5 * (N + 1) * d) / sh;
    }
    acc += f * bracket;
  }
  return acc * cplx(0.0, 0.5 / m);
}

cplx integrate_singular(const std::function<cplx(cplx)>& density, const CircleGrid& grid, cplx xi) {
  std::vector<cplx> samples;
  samples.reserve(static_cast<std::size_t>(grid.node_count()));
  for (cplx eta : grid.nodes()) samples.push_back(density(eta));
  return integrate_singular(samples, grid, xi);
}

}  // namespace incmap
