#include "swe/oracle/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "swe/kernels.hpp"

namespace swe::oracle {

SpinLadder dicke_ladder(std::size_t n_atoms) {
  SpinLadder l;
  l.raise_amp.resize(n_atoms);
  for (std::size_t s = 0; s < n_atoms; ++s)
    l.raise_amp[s] =
        std::sqrt(double(s + 1) * double(n_atoms - s) / double(n_atoms));
  return l;
}

SpinLadder boson_ladder(std::size_t spin_dim, double boson_factor) {
  SpinLadder l;
  l.raise_amp.resize(spin_dim - 1);
  const double root_a = std::sqrt(boson_factor);
  for (std::size_t s = 0; s + 1 < spin_dim; ++s)
    l.raise_amp[s] = root_a * std::sqrt(double(s + 1));
  return l;
}

PairHamiltonian::PairHamiltonian(FockBasis basis, std::vector<double> couplings,
                                 const SpinLadder& ladder)
    : basis_(std::move(basis)), couplings_(std::move(couplings)) {
  const std::size_t n_modes = basis_.mode_dims.size();
  const std::size_t dim = basis_.dim;
  const std::size_t ds = basis_.spin_dim;

  pair_w_.resize(n_modes);
  pair_shift_.resize(n_modes);
  mode_w_.resize(n_modes);
  for (std::size_t n = 0; n < n_modes; ++n) {
    const std::size_t stride = basis_.mode_strides[n];
    const std::size_t dn = basis_.mode_dims[n];

    pair_shift_[n] = stride + 1;
    pair_w_[n].assign(2 * (dim - pair_shift_[n]), 0.0);
    for (std::size_t i = 0; i < dim - pair_shift_[n]; ++i) {
      const std::size_t level = basis_.level_of(i, n);
      const std::size_t s = basis_.spin_of(i);
      if (level + 1 < dn && s + 1 < ds) {
        const double w = std::sqrt(double(level + 1)) * ladder.raise_amp[s];
        pair_w_[n][2 * i] = w;
        pair_w_[n][2 * i + 1] = w;
      }
    }

    mode_w_[n].assign(2 * (dim - stride), 0.0);
    for (std::size_t i = 0; i < dim - stride; ++i) {
      const std::size_t level = basis_.level_of(i, n);
      if (level + 1 < dn) {
        const double w = std::sqrt(double(level + 1));
        mode_w_[n][2 * i] = w;
        mode_w_[n][2 * i + 1] = w;
      }
    }
  }

  spin_w_.assign(2 * (dim - 1), 0.0);
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    const std::size_t s = basis_.spin_of(i);
    if (s + 1 < ds) {
      spin_w_[2 * i] = ladder.raise_amp[s];
      spin_w_[2 * i + 1] = ladder.raise_amp[s];
    }
  }
}

void PairHamiltonian::apply_hermitian(const cplx* x, cplx* y) const {
  const std::size_t dim = basis_.dim;
  std::fill(y, y + dim, cplx(0.0));
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  for (std::size_t n = 0; n < couplings_.size(); ++n) {
    const std::size_t shift = pair_shift_[n];
    const std::size_t len = dim - shift;
    // i k_n a_n+ S+ : y[i + shift] += i k_n w[i] x[i]
    kernels::wsaxpy_i(couplings_[n], pair_w_[n].data(), xd, yd + 2 * shift,
                      len);
    // -i k_n a_n S : y[i] -= i k_n w[i] x[i + shift]
    kernels::wsaxpy_i(-couplings_[n], pair_w_[n].data(), xd + 2 * shift, yd,
                      len);
  }
}

void PairHamiltonian::apply_annihilator(std::size_t mode, const cplx* x,
                                        cplx* y) const {
  const std::size_t stride = basis_.mode_strides[mode];
  const std::size_t len = basis_.dim - stride;
  std::fill(y, y + basis_.dim, cplx(0.0));
  kernels::wsaxpy(1.0, mode_w_[mode].data(),
                  reinterpret_cast<const double*>(x) + 2 * stride,
                  reinterpret_cast<double*>(y), 2 * len);
}

void PairHamiltonian::apply_creator(std::size_t mode, const cplx* x,
                                    cplx* y) const {
  const std::size_t stride = basis_.mode_strides[mode];
  const std::size_t len = basis_.dim - stride;
  std::fill(y, y + basis_.dim, cplx(0.0));
  kernels::wsaxpy(1.0, mode_w_[mode].data(), reinterpret_cast<const double*>(x),
                  reinterpret_cast<double*>(y) + 2 * stride, 2 * len);
}

void PairHamiltonian::apply_spin_lower(const cplx* x, cplx* y) const {
  const std::size_t len = basis_.dim - 1;
  std::fill(y, y + basis_.dim, cplx(0.0));
  kernels::wsaxpy(1.0, spin_w_.data(), reinterpret_cast<const double*>(x) + 2,
                  reinterpret_cast<double*>(y), 2 * len);
}

void PairHamiltonian::apply_spin_raise(const cplx* x, cplx* y) const {
  const std::size_t len = basis_.dim - 1;
  std::fill(y, y + basis_.dim, cplx(0.0));
  kernels::wsaxpy(1.0, spin_w_.data(), reinterpret_cast<const double*>(x),
                  reinterpret_cast<double*>(y) + 2, 2 * len);
}

}  // namespace swe::oracle
