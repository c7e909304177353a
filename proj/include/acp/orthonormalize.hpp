#pragma once

#include <span>
#include <vector>

#include "acp/complex_matrix.hpp"

namespace acp {

/// Modified Gram-Schmidt with one re-orthogonalization pass, in place. Returns
/// the norm each vector had after projection (the diagonal of R), which is
/// real and positive for linearly independent input.
inline std::vector<double> orthonormalize(std::span<std::vector<Complex>> vectors) {
  std::vector<double> diag(vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    auto& vj = vectors[j];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex proj = 0.0;
        for (std::size_t k = 0; k < vj.size(); ++k) proj += std::conj(vectors[i][k]) * vj[k];
        for (std::size_t k = 0; k < vj.size(); ++k) vj[k] -= proj * vectors[i][k];
      }
    }
    const double nrm = vector_norm(vj);
    if (nrm == 0.0) throw Error(ErrorKind::BadDimension, "linearly dependent vectors");
    for (auto& z : vj) z /= nrm;
    diag[j] = nrm;
  }
  return diag;
}

}  // namespace acp
