#include "swe/oracle/fock_basis.hpp"

namespace swe::oracle {

FockBasis::FockBasis(std::vector<std::size_t> mode_dims_in,
                     std::size_t spin_dim_in)
    : mode_dims(std::move(mode_dims_in)), spin_dim(spin_dim_in) {
  mode_strides.resize(mode_dims.size());
  std::size_t stride = spin_dim;
  for (std::size_t n = mode_dims.size(); n-- > 0;) {
    mode_strides[n] = stride;
    stride *= mode_dims[n];
  }
  dim = stride;
}

}  // namespace swe::oracle
