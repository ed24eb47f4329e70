// AVX2+FMA variants of the vector kernels. This translation unit is the only
// one compiled with -mavx2 -mfma; it is selected at runtime via CPUID.

#include "swe/kernels.hpp"

#if defined(SWE_KERNELS_BUILD_AVX2)

#include <immintrin.h>

namespace swe::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sw = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sw));
}

void wsaxpy_avx2(double a, const double* w, const double* x, double* y,
                 std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256d t0 = _mm256_mul_pd(av, _mm256_loadu_pd(w + k));
    __m256d t1 = _mm256_mul_pd(av, _mm256_loadu_pd(w + k + 4));
    __m256d y0 = _mm256_fmadd_pd(t0, _mm256_loadu_pd(x + k),
                                 _mm256_loadu_pd(y + k));
    __m256d y1 = _mm256_fmadd_pd(t1, _mm256_loadu_pd(x + k + 4),
                                 _mm256_loadu_pd(y + k + 4));
    _mm256_storeu_pd(y + k, y0);
    _mm256_storeu_pd(y + k + 4, y1);
  }
  for (; k + 4 <= n; k += 4) {
    __m256d t = _mm256_mul_pd(av, _mm256_loadu_pd(w + k));
    _mm256_storeu_pd(
        y + k, _mm256_fmadd_pd(t, _mm256_loadu_pd(x + k), _mm256_loadu_pd(y + k)));
  }
  for (; k < n; ++k) y[k] += a * w[k] * x[k];
}

void wsaxpy_i_avx2(double a, const double* w, const double* x, double* y,
                   std::size_t n) {
  // y += i*a*w.*x on interleaved pairs: (re,im) += a*w*(-x_im, x_re)
  const __m256d av = _mm256_set1_pd(a);
  const __m256d neg_even = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
  std::size_t nd = 2 * n;
  std::size_t k = 0;
  for (; k + 4 <= nd; k += 4) {
    __m256d xv = _mm256_loadu_pd(x + k);
    __m256d xs = _mm256_permute_pd(xv, 0b0101);  // (im, re) per pair
    __m256d t = _mm256_mul_pd(_mm256_mul_pd(av, _mm256_loadu_pd(w + k)),
                              _mm256_mul_pd(xs, neg_even));
    _mm256_storeu_pd(y + k, _mm256_add_pd(_mm256_loadu_pd(y + k), t));
  }
  for (std::size_t j = k / 2; j < n; ++j) {
    y[2 * j] -= a * w[2 * j] * x[2 * j + 1];
    y[2 * j + 1] += a * w[2 * j + 1] * x[2 * j];
  }
}

void daxpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + k),
                                            _mm256_loadu_pd(y + k)));
    _mm256_storeu_pd(y + k + 4, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + k + 4),
                                                _mm256_loadu_pd(y + k + 4)));
  }
  for (; k + 4 <= n; k += 4)
    _mm256_storeu_pd(y + k, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + k),
                                            _mm256_loadu_pd(y + k)));
  for (; k < n; ++k) y[k] += a * x[k];
}

void zaxpy_avx2(cplx a, const cplx* x, cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t nd = 2 * n;
  std::size_t k = 0;
  for (; k + 4 <= nd; k += 4) {
    __m256d xv = _mm256_loadu_pd(xd + k);
    __m256d xs = _mm256_permute_pd(xv, 0b0101);
    // (ar*re - ai*im, ar*im + ai*re) per pair
    __m256d t = _mm256_fmaddsub_pd(ar, xv, _mm256_mul_pd(ai, xs));
    _mm256_storeu_pd(yd + k, _mm256_add_pd(_mm256_loadu_pd(yd + k), t));
  }
  for (std::size_t j = k / 2; j < n; ++j) y[j] += a * x[j];
}

cplx zdotc_avx2(const cplx* x, const cplx* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_p = _mm256_setzero_pd();  // xr*yr, xi*yi pairs
  __m256d acc_s = _mm256_setzero_pd();  // xr*yi, xi*yr pairs
  std::size_t nd = 2 * n;
  std::size_t k = 0;
  for (; k + 4 <= nd; k += 4) {
    __m256d xv = _mm256_loadu_pd(xd + k);
    __m256d yv = _mm256_loadu_pd(yd + k);
    __m256d ys = _mm256_permute_pd(yv, 0b0101);
    acc_p = _mm256_fmadd_pd(xv, yv, acc_p);
    acc_s = _mm256_fmadd_pd(xv, ys, acc_s);
  }
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(acc_p);
  double im = hsum(_mm256_mul_pd(acc_s, sign));
  for (std::size_t j = k / 2; j < n; ++j) {
    re += x[j].real() * y[j].real() + x[j].imag() * y[j].imag();
    im += x[j].real() * y[j].imag() - x[j].imag() * y[j].real();
  }
  return {re, im};
}

double dnrm2sq_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    __m256d v0 = _mm256_loadu_pd(x + k);
    __m256d v1 = _mm256_loadu_pd(x + k + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; k < n; ++k) s += x[k] * x[k];
  return s;
}

void dscal_avx2(double a, double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4)
    _mm256_storeu_pd(x + k, _mm256_mul_pd(av, _mm256_loadu_pd(x + k)));
  for (; k < n; ++k) x[k] *= a;
}

constexpr Backend kAvx2 = {
    "avx2",     wsaxpy_avx2, wsaxpy_i_avx2, daxpy_avx2,
    zaxpy_avx2, zdotc_avx2,  dnrm2sq_avx2,  dscal_avx2,
};

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace

const Backend* avx2_backend() {
  static const Backend* b = cpu_has_avx2() ? &kAvx2 : nullptr;
  return b;
}

}  // namespace swe::kernels

#else

namespace swe::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace swe::kernels

#endif
