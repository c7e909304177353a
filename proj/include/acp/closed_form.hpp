#pragma once

#include <complex>
#include <string>

#include "acp/complex_matrix.hpp"
#include "acp/expm.hpp"
#include "acp/pair.hpp"

namespace acp {

/// e^{zA} = I cosh z + A sinh z for an involution A.
inline ComplexMatrix exp_involution(const ComplexMatrix& a, Complex z, double tol = kDefaultTol) {
  require_square(a);
  if (involution_residual(a) > tol) throw Error(ErrorKind::NotInvolution, "A^2 != I within tol");
  return std::cosh(z) * ComplexMatrix::identity(a.rows()) + std::sinh(z) * a;
}

/// e^{zAB} = I cos z + AB sin z, using (AB)^2 = -I.
inline ComplexMatrix exp_product(const InvolutionPair& p, Complex z) {
  return std::cos(z) * ComplexMatrix::identity(p.dimension()) + std::sin(z) * (p.a() * p.b());
}

/// e^{z (A (x) B)} = I cosh z + (A (x) B) sinh z, using (A (x) B)^2 = I.
inline ComplexMatrix exp_kron_pair(const InvolutionPair& p, Complex z) {
  const std::size_t n = p.dimension();
  return std::cosh(z) * ComplexMatrix::identity(n * n) + std::sinh(z) * kron(p.a(), p.b());
}

/// e^{zN} = I + zN for N = A + iB; the series stops after the linear term
/// because N^2 = 0.
inline ComplexMatrix exp_nilpotent(const InvolutionPair& p, Complex z) {
  return ComplexMatrix::identity(p.dimension()) + z * nilpotent(p);
}

/// Truncation policy for anticomm_series. Defaults cover ||X||_F <= 4.
struct SeriesTruncation {
  int max_terms = 80;
  double term_tol = 1e-16;  // relative to the running sum's Frobenius norm
};

struct SeriesResult {
  ComplexMatrix value;
  int terms = 0;  // index of the last term added
  bool converged = false;

  /// The value, or TruncationNotConverged if max_terms ran out first.
  const ComplexMatrix& checked() const {
    if (!converged) {
      throw Error(ErrorKind::TruncationNotConverged,
                  "term tolerance not met after " + std::to_string(terms) + " terms");
    }
    return value;
  }
};

/// e^X Y e^X summed as Y + [X,Y]+ + (1/2!)[X,[X,Y]+]+ + ...
///
/// Stops at the first k whose term norm is at most term_tol times the running
/// sum, or at max_terms with converged = false. The partial sum is returned
/// either way.
inline SeriesResult anticomm_series(const ComplexMatrix& x, const ComplexMatrix& y, SeriesTruncation trunc = {}) {
  if (trunc.max_terms < 1 || !(trunc.term_tol > 0.0)) {
    throw Error(ErrorKind::BadDimension, "series truncation needs max_terms >= 1 and term_tol > 0");
  }
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "series needs square matrices of equal size");
  }
  SeriesResult out{y, 0, false};
  ComplexMatrix term = y;
  for (int k = 1; k <= trunc.max_terms; ++k) {
    term = anticommutator(x, term);
    term *= 1.0 / k;
    out.value += term;
    out.terms = k;
    if (frobenius_norm(term) <= trunc.term_tol * frobenius_norm(out.value)) {
      out.converged = true;
      break;
    }
  }
  return out;
}

/// e^X Y e^{-X} = (series in X) e^{-2X}, for an involution X.
inline ComplexMatrix conjugate_series_right(const ComplexMatrix& x, const ComplexMatrix& y, SeriesTruncation trunc = {},
                                            double tol = kDefaultTol) {
  return anticomm_series(x, y, trunc).value * exp_involution(x, -2.0, tol);
}

/// e^X Y e^{-X} = e^{2X} (series in -X), for an involution X.
inline ComplexMatrix conjugate_series_left(const ComplexMatrix& x, const ComplexMatrix& y, SeriesTruncation trunc = {},
                                           double tol = kDefaultTol) {
  return exp_involution(x, 2.0, tol) * anticomm_series(-x, y, trunc).value;
}

/// e^X Y e^{-X} for general X, through the oracle.
inline ComplexMatrix conjugate_oracle(const ComplexMatrix& x, const ComplexMatrix& y) {
  return expm_oracle(x) * y * expm_oracle(-x);
}

struct ConjugationResiduals {
  double right = 0.0;    // ||e^A B e^{-A} - B e^{-2A}||_F
  double left = 0.0;     // ||e^A B e^{-A} - e^{2A} B||_F
  double inverse = 0.0;  // ||e^{-A} - B e^A B||_F

  double max() const noexcept { return std::max({right, left, inverse}); }
};

/// Residuals of the conjugation identities for an arbitrary (A, B) with A an
/// involution. A is the only matrix exponentiated; B may be anything square.
inline ConjugationResiduals conjugation_identities(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   double tol = kDefaultTol) {
  const ComplexMatrix ea = exp_involution(a, 1.0, tol);
  const ComplexMatrix ema = exp_involution(a, -1.0, tol);
  const ComplexMatrix conj = ea * b * ema;
  return {
      frobenius_distance(conj, b * exp_involution(a, -2.0, tol)),
      frobenius_distance(conj, exp_involution(a, 2.0, tol) * b),
      frobenius_distance(ema, b * ea * b),
  };
}

inline ConjugationResiduals conjugation_identities(const InvolutionPair& p) {
  return conjugation_identities(p.a(), p.b(), p.certified_tol());
}

}  // namespace acp
