#include "incmap/simd_kernels.hpp"

#include <algorithm>
#include <limits>

namespace incmap::simd {

PairSumResult orbit_pair_sum_scalar(cplx eta, const PoleArrays& poles) {
  const double er = eta.real();
  const double ei = eta.imag();
  double sr = 0.0, si = 0.0;
  double min_d = std::numeric_limits<double>::infinity();
  const std::size_t n = poles.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double dax = er - poles.ar[k];
    const double day = ei - poles.ai[k];
    const double dbx = er - poles.br[k];
    const double dby = ei - poles.bi[k];
    const double na = dax * dax + day * day;
    const double nb = dbx * dbx + dby * dby;
    // 1/(x+iy) = (x - iy)/(x^2+y^2)
    sr += dax / na - dbx / nb;
    si += -day / na + dby / nb;
    min_d = std::min(min_d, std::min(na, nb));
  }
  return {cplx(sr, si), min_d};
}

namespace {

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend g_mode = Backend::automatic;

bool use_avx2() {
  switch (g_mode) {
    case Backend::scalar:
      return false;
    case Backend::avx2:
    case Backend::automatic:
      return avx2_available();
  }
  return false;
}

}  // namespace

PairSumResult orbit_pair_sum(cplx eta, const PoleArrays& poles) {
#if defined(__x86_64__) || defined(_M_X64)
  if (use_avx2()) return orbit_pair_sum_avx2(eta, poles);
#endif
  return orbit_pair_sum_scalar(eta, poles);
}

const char* active_backend() { return use_avx2() ? "avx2" : "scalar"; }

void force_backend(Backend b) { g_mode = b; }

}  // namespace incmap::simd
