#pragma once

#include <cstddef>
#include <vector>

namespace swe::oracle {

// Product basis (mode_1 ... mode_N, spin) with the spin index fastest.
// Flat index = ((n_1 * D_2 + n_2) * ... ) * d_s + s.
struct FockBasis {
  std::vector<std::size_t> mode_dims;  // cutoff + 1 per Stokes mode
  std::size_t spin_dim = 0;
  std::vector<std::size_t> mode_strides;
  std::size_t dim = 0;

  FockBasis() = default;
  FockBasis(std::vector<std::size_t> mode_dims_in, std::size_t spin_dim_in);

  std::size_t spin_of(std::size_t idx) const { return idx % spin_dim; }
  std::size_t level_of(std::size_t idx, std::size_t mode) const {
    return (idx / mode_strides[mode]) % mode_dims[mode];
  }
};

}  // namespace swe::oracle
