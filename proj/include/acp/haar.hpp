#pragma once

#include <vector>

#include "acp/complex_matrix.hpp"
#include "acp/orthonormalize.hpp"
#include "acp/random.hpp"

namespace acp {

/// Haar-distributed n x n unitary: QR of a complex Ginibre matrix with the
/// diagonal of R made positive real. Gram-Schmidt produces exactly that R, so
/// Q needs no further phase correction.
inline ComplexMatrix haar_unitary(std::size_t n, RandomSource& rng) {
  if (n == 0) throw Error(ErrorKind::BadDimension, "unitary dimension must be positive");
  std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
  for (auto& c : cols)
    for (auto& z : c) z = rng.complex_normal();
  orthonormalize(cols);
  ComplexMatrix u(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u(i, j) = cols[j][i];
  return u;
}

}  // namespace acp
