#pragma once

#include <cmath>
#include <utility>

#include "acp/complex_matrix.hpp"

namespace acp {

/// LU with partial pivoting; the determinant is the signed product of pivots.
/// A singular input yields exactly zero.
inline Complex determinant(ComplexMatrix lu) {
  require_square(lu);
  const std::size_t n = lu.rows();
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double a = std::abs(lu(i, k));
      if (a > best) {
        best = a;
        pivot = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      det = -det;
    }
    const Complex p = lu(k, k);
    det *= p;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / p;
      if (f == Complex(0.0)) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

}  // namespace acp
