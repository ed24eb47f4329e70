#pragma once

// Vector kernels for the Fock-space evolution hot loops.
//
// Every kernel exists in a scalar reference form and, on x86-64, an AVX2+FMA
// form. The active backend is picked once at startup from CPUID and can be
// overridden with the environment variable SWE_KERNELS=scalar|avx2 or from
// code (tests compare backends against each other on random data).
//
// Complex arrays are interleaved (re, im) doubles. Weighted kernels take a
// real weight array that is duplicated per complex slot: w[2j] == w[2j+1].

#include <complex>
#include <cstddef>

namespace swe::kernels {

using cplx = std::complex<double>;

struct Backend {
  const char* name;

  // y[k] += alpha * w[k] * x[k] over n raw doubles
  void (*wsaxpy)(double alpha, const double* w, const double* x, double* y,
                 std::size_t n);
  // complex pairs: y[j] += i * alpha * w[j] * x[j] over n complex slots
  // (w duplicated, length 2n)
  void (*wsaxpy_i)(double alpha, const double* w, const double* x, double* y,
                   std::size_t n);
  // y[k] += alpha * x[k] over n raw doubles
  void (*daxpy)(double alpha, const double* x, double* y, std::size_t n);
  // y[j] += alpha * x[j] over n complex slots
  void (*zaxpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // sum_j conj(x[j]) * y[j] over n complex slots
  cplx (*zdotc)(const cplx* x, const cplx* y, std::size_t n);
  // sum_k x[k]^2 over n raw doubles
  double (*dnrm2sq)(const double* x, std::size_t n);
  // x[k] *= alpha over n raw doubles
  void (*dscal)(double alpha, double* x, std::size_t n);
};

const Backend& scalar_backend();

// nullptr when the binary lacks AVX2 support or the CPU does not have it
const Backend* avx2_backend();

const Backend& active_backend();
void set_active_backend(const Backend& b);

// Convenience wrappers through the active backend.
inline void wsaxpy(double a, const double* w, const double* x, double* y,
                   std::size_t n) {
  active_backend().wsaxpy(a, w, x, y, n);
}
inline void wsaxpy_i(double a, const double* w, const double* x, double* y,
                     std::size_t n) {
  active_backend().wsaxpy_i(a, w, x, y, n);
}
inline void daxpy(double a, const double* x, double* y, std::size_t n) {
  active_backend().daxpy(a, x, y, n);
}
inline void zaxpy(cplx a, const cplx* x, cplx* y, std::size_t n) {
  active_backend().zaxpy(a, x, y, n);
}
inline cplx zdotc(const cplx* x, const cplx* y, std::size_t n) {
  return active_backend().zdotc(x, y, n);
}
inline double dnrm2sq(const double* x, std::size_t n) {
  return active_backend().dnrm2sq(x, n);
}
inline void dscal(double a, double* x, std::size_t n) {
  active_backend().dscal(a, x, n);
}

}  // namespace swe::kernels
