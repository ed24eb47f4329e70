#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "swe/oracle/fock_basis.hpp"

namespace swe::oracle {

using cplx = std::complex<double>;

// Spin ladder amplitudes: raise(s) is the coefficient of |s+1> in S+|s>,
// and equally the coefficient of |s> in S|s+1>.
struct SpinLadder {
  std::vector<double> raise_amp;  // length spin_dim - 1
};

SpinLadder dicke_ladder(std::size_t n_atoms);
SpinLadder boson_ladder(std::size_t spin_dim, double boson_factor);

// H = i sum_n k_n (a_n+ S+ - a_n S) applied matrix-free. Every term is a
// flat-index shift by (mode stride + 1) with a precomputed real weight per
// slot; weights are zero wherever the shift would cross an axis boundary,
// so one fused elementwise kernel call covers the whole array.
class PairHamiltonian {
 public:
  PairHamiltonian(FockBasis basis, std::vector<double> couplings,
                  const SpinLadder& ladder);

  const FockBasis& basis() const { return basis_; }
  std::size_t dim() const { return basis_.dim; }

  // y = (i G) x with G = sum_n k_n (a_n+ S+ - a_n S); Hermitian, so it can
  // be fed directly to the Lanczos propagator. exp(-i (iG) t) = exp(G t).
  void apply_hermitian(const cplx* x, cplx* y) const;

  // Single-operator applications for moment measurements (out is
  // overwritten). S carries the same ladder used by the evolution.
  void apply_annihilator(std::size_t mode, const cplx* x, cplx* y) const;
  void apply_creator(std::size_t mode, const cplx* x, cplx* y) const;
  void apply_spin_lower(const cplx* x, cplx* y) const;
  void apply_spin_raise(const cplx* x, cplx* y) const;

 private:
  FockBasis basis_;
  std::vector<double> couplings_;
  // duplicated (re, im) weights, one array per mode for the pair shift
  std::vector<std::vector<double>> pair_w_;
  std::vector<std::size_t> pair_shift_;
  // duplicated single-axis weights
  std::vector<std::vector<double>> mode_w_;
  std::vector<double> spin_w_;
};

}  // namespace swe::oracle
