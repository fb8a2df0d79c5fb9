#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "incmap/simd_kernels.hpp"

namespace incmap::simd {

PairSumResult orbit_pair_sum_avx2(cplx eta, const PoleArrays& poles) {
  const std::size_t n = poles.size();
  const __m256d er = _mm256_set1_pd(eta.real());
  const __m256d ei = _mm256_set1_pd(eta.imag());
  __m256d sr = _mm256_setzero_pd();
  __m256d si = _mm256_setzero_pd();
  __m256d mind = _mm256_set1_pd(std::numeric_limits<double>::infinity());

  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d dax = _mm256_sub_pd(er, _mm256_loadu_pd(&poles.ar[k]));
    const __m256d day = _mm256_sub_pd(ei, _mm256_loadu_pd(&poles.ai[k]));
    const __m256d dbx = _mm256_sub_pd(er, _mm256_loadu_pd(&poles.br[k]));
    const __m256d dby = _mm256_sub_pd(ei, _mm256_loadu_pd(&poles.bi[k]));
    const __m256d na = _mm256_fmadd_pd(dax, dax, _mm256_mul_pd(day, day));
    const __m256d nb = _mm256_fmadd_pd(dbx, dbx, _mm256_mul_pd(dby, dby));
    sr = _mm256_add_pd(sr, _mm256_sub_pd(_mm256_div_pd(dax, na), _mm256_div_pd(dbx, nb)));
    si = _mm256_add_pd(si, _mm256_sub_pd(_mm256_div_pd(dby, nb), _mm256_div_pd(day, na)));
    mind = _mm256_min_pd(mind, _mm256_min_pd(na, nb));
  }

  alignas(32) double buf[4];
  _mm256_store_pd(buf, sr);
  double res_r = buf[0] + buf[1] + buf[2] + buf[3];
  _mm256_store_pd(buf, si);
  double res_i = buf[0] + buf[1] + buf[2] + buf[3];
  _mm256_store_pd(buf, mind);
  double min_d = std::min(std::min(buf[0], buf[1]), std::min(buf[2], buf[3]));

  for (; k < n; ++k) {
    const double dax = eta.real() - poles.ar[k];
    const double day = eta.imag() - poles.ai[k];
    const double dbx = eta.real() - poles.br[k];
    const double dby = eta.imag() - poles.bi[k];
    const double na = dax * dax + day * day;
    const double nb = dbx * dbx + dby * dby;
    res_r += dax / na - dbx / nb;
    res_i += -day / na + dby / nb;
    min_d = std::min(min_d, std::min(na, nb));
  }
  return {cplx(res_r, res_i), min_d};
}

}  // namespace incmap::simd

#endif
