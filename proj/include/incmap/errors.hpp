#pragma once

#include <stdexcept>
#include <string>

namespace incmap {

struct pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct degenerate_map_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct empty_domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct near_pole_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct off_contour_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct quadrature_sample_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct truncation_too_deep_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct invalid_parameters_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace incmap
