#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace incmap::simd {

using cplx = std::complex<double>;

/// Paired pole coordinates in structure-of-arrays layout. Pair k contributes
/// 1/(eta - A_k) - 1/(eta - B_k) to the orbit sum.
struct PoleArrays {
  std::vector<double> ar, ai;  // A poles
  std::vector<double> br, bi;  // B poles

  std::size_t size() const { return ar.size(); }
  void reserve(std::size_t n) {
    ar.reserve(n);
    ai.reserve(n);
    br.reserve(n);
    bi.reserve(n);
  }
  void push_back(cplx a, cplx b) {
    ar.push_back(a.real());
    ai.push_back(a.imag());
    br.push_back(b.real());
    bi.push_back(b.imag());
  }
};

/// Result of an orbit sum together with the squared distance to the nearest
/// pole encountered, so callers can detect near-pole evaluations.
struct PairSumResult {
  cplx sum;
  double min_dist_sq;
};

PairSumResult orbit_pair_sum_scalar(cplx eta, const PoleArrays& poles);
#if defined(__x86_64__) || defined(_M_X64)
PairSumResult orbit_pair_sum_avx2(cplx eta, const PoleArrays& poles);
#endif

enum class Backend { automatic, scalar, avx2 };

/// Runtime-dispatched orbit sum (AVX2 when the CPU supports it).
PairSumResult orbit_pair_sum(cplx eta, const PoleArrays& poles);

/// Name of the backend the dispatcher currently resolves to.
const char* active_backend();

/// Override the dispatcher (Backend::automatic restores CPU detection).
/// Requesting avx2 on a CPU without it falls back to scalar.
void force_backend(Backend b);

}  // namespace incmap::simd
