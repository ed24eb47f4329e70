#pragma once

#include <Eigen/Dense>

#include "swe/model.hpp"

namespace swe {

// Linear input-output transform xi(t) = M(t) xi(0) on the operator vector.
// All closed-form coefficients are real, so the matrix is real and commutes
// with the adjoint swap. M(0) = I and M K M^T = K (commutator preservation).
struct BogoliubovTransform {
  Eigen::MatrixXd matrix;
  double time = 0.0;
  ModelConfig config;
};

// Closed-form transform. With beta = sqrt(a * sum_n k_n^2):
//   S(t)   = cosh(bt) S(0) + (a/b) sinh(bt) sum_n k_n a_n+(0)
//   a_n(t) = (k_n/b) sinh(bt) S+(0) + a_n(0)
//            + (k_n a / b^2)(cosh(bt) - 1) sum_m k_m a_m(0)
// The b -> 0 limit is taken through series forms of sinh(bt)/b and
// (cosh(bt)-1)/b^2, never by division.
BogoliubovTransform analytic_transform(const ModelConfig& cfg, double t);

// Generator A of the Heisenberg equations d(xi)/dt = A xi: the a_n row gets
// k_n S+, the a_n+ row k_n S, the S row a*sum k_n a_n+, the S+ row
// a*sum k_n a_n.
Eigen::MatrixXd heisenberg_generator(const ModelConfig& cfg);

// Independent route: M(t) = exp(A t) via a Pade matrix exponential, sharing
// no code with the closed form; agreement between the two is part of the
// acceptance suite.
BogoliubovTransform numeric_transform(const ModelConfig& cfg, double t);

namespace detail {
// sinh(x)/x and (cosh(x)-1)/x^2, continuous through x = 0
double sinhc(double x);
double coshm1_over_x2(double x);
}  // namespace detail

}  // namespace swe
