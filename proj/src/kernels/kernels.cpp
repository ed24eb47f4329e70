#include "swe/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace swe::kernels {

namespace {

void wsaxpy_scalar(double a, const double* w, const double* x, double* y,
                   std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * w[k] * x[k];
}

void wsaxpy_i_scalar(double a, const double* w, const double* x, double* y,
                     std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    y[2 * j] -= a * w[2 * j] * x[2 * j + 1];
    y[2 * j + 1] += a * w[2 * j + 1] * x[2 * j];
  }
}

void daxpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) y[k] += a * x[k];
}

void zaxpy_scalar(cplx a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) y[j] += a * x[j];
}

cplx zdotc_scalar(const cplx* x, const cplx* y, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    re += x[j].real() * y[j].real() + x[j].imag() * y[j].imag();
    im += x[j].real() * y[j].imag() - x[j].imag() * y[j].real();
  }
  return {re, im};
}

double dnrm2sq_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += x[k] * x[k];
  return s;
}

void dscal_scalar(double a, double* x, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) x[k] *= a;
}

constexpr Backend kScalar = {
    "scalar",     wsaxpy_scalar,  wsaxpy_i_scalar, daxpy_scalar,
    zaxpy_scalar, zdotc_scalar,   dnrm2sq_scalar,  dscal_scalar,
};

const Backend* pick_default() {
  if (const char* env = std::getenv("SWE_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return &kScalar;
    if (std::strcmp(env, "avx2") == 0 && avx2_backend()) return avx2_backend();
  }
  if (const Backend* b = avx2_backend()) return b;
  return &kScalar;
}

const Backend* g_active = nullptr;

}  // namespace

const Backend& scalar_backend() { return kScalar; }

const Backend& active_backend() {
  if (!g_active) g_active = pick_default();
  return *g_active;
}

void set_active_backend(const Backend& b) { g_active = &b; }

}  // namespace swe::kernels
