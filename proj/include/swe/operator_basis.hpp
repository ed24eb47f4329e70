#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "swe/model.hpp"

namespace swe {

// Fixed operator ordering (a_1, a_1+, ..., a_N, a_N+, S, S+); dim = 2(N+1).
// The spin pair sits last; each annihilator is immediately followed by its
// adjoint.
namespace basis {

inline std::size_t dim(std::size_t n_stokes) { return 2 * (n_stokes + 1); }
inline std::size_t a(std::size_t mode) { return 2 * mode; }
inline std::size_t adag(std::size_t mode) { return 2 * mode + 1; }
inline std::size_t spin(std::size_t n_stokes) { return 2 * n_stokes; }
inline std::size_t spin_dag(std::size_t n_stokes) { return 2 * n_stokes + 1; }
// adjoint partner of row/column i
inline std::size_t adjoint(std::size_t i) { return i ^ 1u; }

// Commutator Gram matrix K[i][j] = [xi_i, xi_j]: +1/-1 blocks for Stokes
// pairs, +a/-a for the rescaled spin pair, zero elsewhere.
Eigen::MatrixXd commutator_gram(const ModelConfig& cfg);

}  // namespace basis

}  // namespace swe
