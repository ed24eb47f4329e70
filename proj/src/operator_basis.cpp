#include "swe/operator_basis.hpp"

namespace swe::basis {

Eigen::MatrixXd commutator_gram(const ModelConfig& cfg) {
  const std::size_t d = dim(cfg.n_stokes);
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(d, d);
  for (std::size_t n = 0; n < cfg.n_stokes; ++n) {
    k(a(n), adag(n)) = 1.0;
    k(adag(n), a(n)) = -1.0;
  }
  k(spin(cfg.n_stokes), spin_dag(cfg.n_stokes)) = cfg.boson_factor;
  k(spin_dag(cfg.n_stokes), spin(cfg.n_stokes)) = -cfg.boson_factor;
  return k;
}

}  // namespace swe::basis
