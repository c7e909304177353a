#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "acp/complex_matrix.hpp"

namespace acp {

struct SpectralDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column j is the unit eigenvector for values[j]
};

inline constexpr int kMaxJacobiSweeps = 100;

namespace detail {

inline double off_diagonal_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic complex Jacobi eigensolver for Hermitian matrices.
///
/// Each rotation acts on the (p, q) plane as G = W R W*, where W moves the phase
/// of h_pq onto the q axis and R is the real symmetric Jacobi rotation, so that
/// (G* H G)_pq = 0. Sweeps stop once the off-diagonal Frobenius norm is at most
/// tol * ||H||_F; after max_sweeps sweeps NoConvergence is raised.
inline SpectralDecomposition hermitian_eig(const ComplexMatrix& input, double tol,
                                           int max_sweeps = kMaxJacobiSweeps) {
  require_square(input);
  const std::size_t n = input.rows();
  const double norm = frobenius_norm(input);
  if (hermitian_residual(input) > tol * norm) {
    throw Error(ErrorKind::NotHermitian, "||H - H*||_F exceeds tol * ||H||_F");
  }

  // Symmetrize so the rotations work on an exactly Hermitian matrix.
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      h(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
      h(j, i) = std::conj(h(i, j));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double threshold = tol * norm;
  int sweep = 0;
  while (detail::off_diagonal_norm(h) > threshold) {
    if (sweep++ == max_sweeps) {
      throw Error(ErrorKind::NoConvergence, "off-diagonal norm above tolerance after " +
                                                std::to_string(max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex hpq = h(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0) continue;
        const Complex phase = hpq / mag;
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex gpq = s * phase;             // G(p, q)
        const Complex gqp = -s * std::conj(phase);  // G(q, p)

        // H <- H G (columns p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hkp = h(k, p);
          const Complex hkq = h(k, q);
          h(k, p) = hkp * c + hkq * gqp;
          h(k, q) = hkp * gpq + hkq * c;
        }
        // H <- G* H (rows p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hpk = h(p, k);
          const Complex hqk = h(q, k);
          h(p, k) = c * hpk + std::conj(gqp) * hqk;
          h(q, k) = std::conj(gpq) * hpk + c * hqk;
        }
        h(p, q) = 0.0;
        h(q, p) = 0.0;
        h(p, p) = app - t * mag;
        h(q, q) = aqq + t * mag;
        // V <- V G
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * c + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * c;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return h(a, a).real() < h(b, b).real(); });

  SpectralDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = h(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace acp
