#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "acp/complex_matrix.hpp"
#include "acp/eigen.hpp"
#include "acp/haar.hpp"
#include "acp/orthonormalize.hpp"
#include "acp/pauli.hpp"
#include "acp/random.hpp"

namespace acp {

inline constexpr double kDefaultTol = 1e-10;

/// XY + YX.
inline ComplexMatrix anticommutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "anticommutator needs square matrices of equal size");
  }
  return x * y + y * x;
}

inline double involution_residual(const ComplexMatrix& x) {
  require_square(x);
  return frobenius_distance(x * x, ComplexMatrix::identity(x.rows()));
}

/// Residuals of the three defining conditions for a candidate pair (A, B):
/// both Hermitian, both square to the identity, anticommutator zero.
/// |tr(AB)| is carried along as a diagnostic and does not affect `passed`.
struct VerificationReport {
  double residual_hermitian_a = 0.0;
  double residual_hermitian_b = 0.0;
  double residual_involution_a = 0.0;
  double residual_involution_b = 0.0;
  double residual_anticommute = 0.0;
  double trace_ab_abs = 0.0;
  bool passed = false;
  double tol = 0.0;

  double max_residual() const noexcept {
    return std::max({residual_hermitian_a, residual_hermitian_b, residual_involution_a, residual_involution_b,
                     residual_anticommute});
  }

  bool consistent() const noexcept { return passed == (max_residual() <= tol); }
};

/// Never throws on a failed check; only on shape errors.
inline VerificationReport verify_pair(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "pair needs square matrices of equal size, got " +
                                                  std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                  " and " + std::to_string(b.rows()) + "x" +
                                                  std::to_string(b.cols()));
  }
  VerificationReport r;
  r.tol = tol;
  r.residual_hermitian_a = hermitian_residual(a);
  r.residual_hermitian_b = hermitian_residual(b);
  r.residual_involution_a = involution_residual(a);
  r.residual_involution_b = involution_residual(b);
  const ComplexMatrix ab = a * b;
  r.residual_anticommute = frobenius_norm(ab + b * a);
  r.trace_ab_abs = std::abs(trace(ab));
  r.passed = r.max_residual() <= tol;
  return r;
}

inline void require_even(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadDimension, "dimension must be positive");
  if (n % 2 != 0) {
    throw Error(ErrorKind::OddDimension,
                "no anticommuting pair of invertible matrices exists in odd dimension " + std::to_string(n) +
                    " (det(AB) = (-1)^n det(AB))");
  }
}

/// A pair of n x n Hermitian involutions with vanishing anticommutator,
/// certified at construction against a stored tolerance. Immutable.
class InvolutionPair {
 public:
  static InvolutionPair certify(ComplexMatrix a, ComplexMatrix b, double tol) {
    if (!a.is_square()) throw Error(ErrorKind::NonSquare, "A is not square");
    require_even(a.rows());
    const VerificationReport report = verify_pair(a, b, tol);
    if (!report.passed) {
      throw Error(ErrorKind::CertificationFailed,
                  "largest residual " + std::to_string(report.max_residual()) + " exceeds tol " + std::to_string(tol));
    }
    return InvolutionPair(std::move(a), std::move(b), tol);
  }

  const ComplexMatrix& a() const noexcept { return a_; }
  const ComplexMatrix& b() const noexcept { return b_; }
  std::size_t dimension() const noexcept { return a_.rows(); }
  double certified_tol() const noexcept { return certified_tol_; }

 private:
  InvolutionPair(ComplexMatrix a, ComplexMatrix b, double tol)
      : a_(std::move(a)), b_(std::move(b)), certified_tol_(tol) {}

  ComplexMatrix a_;
  ComplexMatrix b_;
  double certified_tol_;
};

/// A0 = diag(+1 x n/2, -1 x n/2), B0 = sum_j (e_j e_{j+n/2}* + e_{j+n/2} e_j*).
/// For n = 2 this is (sigma3, sigma1).
inline InvolutionPair canonical_pair(std::size_t n, double tol = kDefaultTol) {
  require_even(n);
  const std::size_t h = n / 2;
  ComplexMatrix a(n, n);
  ComplexMatrix b(n, n);
  for (std::size_t j = 0; j < h; ++j) {
    a(j, j) = 1.0;
    a(j + h, j + h) = -1.0;
    b(j, j + h) = 1.0;
    b(j + h, j) = 1.0;
  }
  return InvolutionPair::certify(std::move(a), std::move(b), tol);
}

/// (U A0 U*, U B0 U*) for a Haar unitary U and the canonical pair (A0, B0).
inline InvolutionPair random_pair(std::size_t n, RandomSource& rng, double tol = kDefaultTol) {
  require_even(n);
  const InvolutionPair base = canonical_pair(n, tol);
  const ComplexMatrix u = haar_unitary(n, rng);
  const ComplexMatrix ud = adjoint(u);
  return InvolutionPair::certify(u * base.a() * ud, u * base.b() * ud, tol);
}

/// Hermitian involution with the given numbers of +1 and -1 eigenvalues,
/// conjugated by a Haar unitary.
inline ComplexMatrix random_involution(std::size_t plus, std::size_t minus, RandomSource& rng) {
  std::vector<double> signs(plus, 1.0);
  signs.insert(signs.end(), minus, -1.0);
  const ComplexMatrix u = haar_unitary(signs.size(), rng);
  return u * ComplexMatrix::diagonal(signs) * adjoint(u);
}

namespace detail {

inline void require_hermitian_involution(const ComplexMatrix& c, double tol, std::string_view what) {
  require_square(c, what);
  if (hermitian_residual(c) > tol) throw Error(ErrorKind::NotHermitian, std::string(what) + " is not Hermitian");
  if (involution_residual(c) > tol) {
    throw Error(ErrorKind::NotInvolution, std::string(what) + " does not square to the identity");
  }
}

}  // namespace detail

/// Partner B for a traceless Hermitian involution A, built from an orthonormal
/// eigenbasis as B = sum_j (v+_j v-_j* + v-_j v+_j*).
///
/// The j-th +1 eigenvector is paired with the j-th -1 eigenvector in eigensolver
/// order. Eigenvalues within 1e-6 of +1 (resp. -1) form that eigenspace, and each
/// eigenspace is re-orthonormalized before pairing.
inline ComplexMatrix derive_partner(const ComplexMatrix& a, double tol = kDefaultTol) {
  require_square(a);
  const std::size_t n = a.rows();
  require_even(n);
  detail::require_hermitian_involution(a, tol, "A");
  if (std::abs(trace(a)) > tol * static_cast<double>(n)) {
    throw Error(ErrorKind::UnbalancedSpectrum,
                "tr(A) = " + std::to_string(trace(a).real()) + " != 0, so the +1 and -1 eigenspaces differ in size");
  }

  ComplexMatrix sym = a + adjoint(a);
  sym *= 0.5;
  const SpectralDecomposition eig = hermitian_eig(sym, std::min(tol, 1e-13));

  std::vector<std::vector<Complex>> plus;
  std::vector<std::vector<Complex>> minus;
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = eig.values[j];
    if (std::abs(lambda - 1.0) <= 1e-6) {
      plus.push_back(column(eig.vectors, j));
    } else if (std::abs(lambda + 1.0) <= 1e-6) {
      minus.push_back(column(eig.vectors, j));
    } else {
      throw Error(ErrorKind::NotInvolution, "eigenvalue " + std::to_string(lambda) + " is not +-1");
    }
  }
  if (plus.size() != minus.size()) {
    throw Error(ErrorKind::UnbalancedSpectrum, std::to_string(plus.size()) + " eigenvalues +1 vs " +
                                                   std::to_string(minus.size()) + " eigenvalues -1");
  }
  orthonormalize(plus);
  orthonormalize(minus);

  ComplexMatrix b(n, n);
  for (std::size_t j = 0; j < plus.size(); ++j) {
    const auto& vp = plus[j];
    const auto& vm = minus[j];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) b(r, c) += vp[r] * std::conj(vm[c]) + vm[r] * std::conj(vp[c]);
  }

  const VerificationReport check = verify_pair(a, b, 10.0 * tol);
  if (!check.passed) {
    throw Error(ErrorKind::CertificationFailed,
                "derived partner misses 10*tol by residual " + std::to_string(check.max_residual()));
  }
  return b;
}

/// (C (x) A, C (x) B) for a Hermitian involution C. Re-certified at 10x the
/// larger of tol and the input pair's tolerance.
inline InvolutionPair lift_kron(const ComplexMatrix& c, const InvolutionPair& p, double tol = kDefaultTol) {
  detail::require_hermitian_involution(c, tol, "C");
  return InvolutionPair::certify(kron(c, p.a()), kron(c, p.b()), 10.0 * std::max(tol, p.certified_tol()));
}

/// (A (+) A, B (+) B), certified at 10x the input tolerance.
inline InvolutionPair lift_direct_sum(const InvolutionPair& p) {
  return InvolutionPair::certify(direct_sum(p.a(), p.a()), direct_sum(p.b(), p.b()), 10.0 * p.certified_tol());
}

/// Star embedding of a 2 x 2 pair into 4 x 4, certified at 10x the input tolerance.
inline InvolutionPair lift_star(const InvolutionPair& p) {
  if (p.dimension() != 2) {
    throw Error(ErrorKind::BadDimension, "star lift is defined for 2x2 pairs only, got n = " +
                                             std::to_string(p.dimension()));
  }
  return InvolutionPair::certify(star_embed(p.a()), star_embed(p.b()), 10.0 * p.certified_tol());
}

/// Jordan-Wigner style chain: (sigma1, -sigma2) lifted by sigma3 (x) until the
/// requested size, e.g. n = 4 gives (sigma3 (x) sigma1, -sigma3 (x) sigma2).
/// The result is rebuilt from exact entries, so it is certified at tol itself.
inline InvolutionPair pauli_chain(std::size_t n, double tol = kDefaultTol) {
  require_even(n);
  if ((n & (n - 1)) != 0) {
    throw Error(ErrorKind::BadDimension, "pauli chain size must be a power of two, got " + std::to_string(n));
  }
  ComplexMatrix a = pauli::sigma1();
  ComplexMatrix b = -pauli::sigma2();
  for (std::size_t m = 2; m < n; m *= 2) {
    a = kron(pauli::sigma3(), a);
    b = kron(pauli::sigma3(), b);
  }
  return InvolutionPair::certify(std::move(a), std::move(b), tol);
}

/// N = A + iB. Squares to zero and is non-normal: N*N - NN* = 4i AB.
inline ComplexMatrix nilpotent(const InvolutionPair& p) { return p.a() + Complex(0.0, 1.0) * p.b(); }

}  // namespace acp
