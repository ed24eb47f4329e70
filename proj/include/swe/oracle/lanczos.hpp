#pragma once

// Krylov (Lanczos) propagator for Hermitian generators: psi <- exp(-i H t) psi.
// Substep size adapts to an a-posteriori residual estimate; the small
// tridiagonal exponential is done by dense eigendecomposition. Full
// reorthogonalization keeps the basis orthonormal at the 1e-14 level, which
// is what preserves the state norm to the 1e-10 contract.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "swe/errors.hpp"
#include "swe/kernels.hpp"

namespace swe::oracle {

struct LanczosOptions {
  int krylov_dim = 30;
  double tol = 1e-12;       // per-substep residual target
  int max_substeps = 100000;
};

// Op must provide dim() and apply_hermitian(const cplx*, cplx*).
template <class Op>
void krylov_propagate(const Op& op, std::vector<std::complex<double>>& psi,
                      double t, const LanczosOptions& opt = {}) {
  using cplx = std::complex<double>;
  if (t == 0.0) return;

  const std::size_t dim = op.dim();
  const int m_max = std::min<std::size_t>(opt.krylov_dim, dim);

  std::vector<std::vector<cplx>> v(m_max + 1, std::vector<cplx>(dim));
  std::vector<cplx> w(dim);
  Eigen::VectorXd alpha(m_max), beta(m_max);

  double remaining = std::abs(t);
  const double dir = t >= 0.0 ? 1.0 : -1.0;
  double tau = remaining;
  int substeps = 0;

  while (remaining > 0.0) {
    if (++substeps > opt.max_substeps)
      throw numerical_error("krylov propagation exceeded substep budget");
    tau = std::min(tau, remaining);

    const double nrm0 = std::sqrt(kernels::dnrm2sq(
        reinterpret_cast<const double*>(psi.data()), 2 * dim));
    v[0] = psi;
    kernels::dscal(1.0 / nrm0, reinterpret_cast<double*>(v[0].data()), 2 * dim);

    int m = 0;
    bool breakdown = false;
    for (; m < m_max; ++m) {
      op.apply_hermitian(v[m].data(), w.data());
      // full reorthogonalization, two passes; the diagonal entry comes from
      // the first pass
      cplx a_jj = 0.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= m; ++i) {
          const cplx h = kernels::zdotc(v[i].data(), w.data(), dim);
          kernels::zaxpy(-h, v[i].data(), w.data(), dim);
          if (pass == 0 && i == m) a_jj = h;
        }
      }
      alpha(m) = a_jj.real();
      const double b = std::sqrt(
          kernels::dnrm2sq(reinterpret_cast<const double*>(w.data()), 2 * dim));
      beta(m) = b;
      if (b < 1e-14 * std::max(1.0, std::abs(alpha(m)))) {
        breakdown = true;  // Krylov space is invariant: result is exact
        ++m;
        break;
      }
      v[m + 1] = w;
      kernels::dscal(1.0 / b, reinterpret_cast<double*>(v[m + 1].data()),
                     2 * dim);
    }

    // u = exp(-i T tau) e1 on the m x m tridiagonal section
    Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      tmat(i, i) = alpha(i);
      if (i + 1 < m) tmat(i, i + 1) = tmat(i + 1, i) = beta(i);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tmat);
    const Eigen::VectorXd& lam = es.eigenvalues();
    const Eigen::MatrixXd& q = es.eigenvectors();
    Eigen::VectorXcd u(m);
    for (int i = 0; i < m; ++i) {
      cplx acc = 0.0;
      for (int j = 0; j < m; ++j) {
        const double phase = -dir * lam(j) * tau;
        acc += q(i, j) * q(0, j) * cplx(std::cos(phase), std::sin(phase));
      }
      u(i) = acc;
    }

    const double resid = breakdown ? 0.0 : beta(m - 1) * std::abs(u(m - 1));
    if (resid > opt.tol && tau > 1e-12 * std::abs(t)) {
      tau *= 0.5;  // retry this substep with a shorter interval
      continue;
    }
    if (resid > opt.tol)
      throw numerical_error(
          "krylov propagation stalled: residual " + std::to_string(resid) +
          " above tolerance with minimal substep");

    std::fill(psi.begin(), psi.end(), cplx(0.0));
    for (int i = 0; i < m; ++i)
      kernels::zaxpy(nrm0 * u(i), v[i].data(), psi.data(), dim);

    remaining -= tau;
    tau *= 1.5;  // grow cautiously after an accepted step
  }
}

}  // namespace swe::oracle
