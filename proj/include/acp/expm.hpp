#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "acp/complex_matrix.hpp"

namespace acp {

namespace detail {

// Square complex matrix in long double, real and imaginary parts stored apart.
struct WideMatrix {
  std::size_t n = 0;
  std::vector<long double> re, im;

  explicit WideMatrix(std::size_t size) : n(size), re(size * size, 0.0L), im(size * size, 0.0L) {}

  static WideMatrix identity(std::size_t size) {
    WideMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.re[i * size + i] = 1.0L;
    return m;
  }

  // this += c * x
  void add_scaled(const WideMatrix& x, long double c) {
    for (std::size_t k = 0; k < re.size(); ++k) {
      re[k] += c * x.re[k];
      im[k] += c * x.im[k];
    }
  }
};

inline WideMatrix operator*(const WideMatrix& x, const WideMatrix& y) {
  const std::size_t n = x.n;
  WideMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    long double* out_re = &out.re[i * n];
    long double* out_im = &out.im[i * n];
    for (std::size_t k = 0; k < n; ++k) {
      const long double ar = x.re[i * n + k], ai = x.im[i * n + k];
      if (ar == 0.0L && ai == 0.0L) continue;
      const long double* y_re = &y.re[k * n];
      const long double* y_im = &y.im[k * n];
      for (std::size_t j = 0; j < n; ++j) {
        out_re[j] += ar * y_re[j] - ai * y_im[j];
        out_im[j] += ar * y_im[j] + ai * y_re[j];
      }
    }
  }
  return out;
}

}  // namespace detail

/// Reference matrix exponential by scaling and squaring, in long double.
///
/// X is scaled by 2^-s until ||Y||_F <= 1/2 with Y = 2^-s X. e^Y is the
/// degree-18 Taylor polynomial (remainder below 1e-22 relative), evaluated
/// in blocks of four powers. The result is squared s times and rounded to
/// double at the end.
///
/// Deliberately independent of every closed form in closed_form.hpp, which are
/// tested against it.
inline ComplexMatrix expm_oracle(const ComplexMatrix& x) {
  using detail::WideMatrix;
  require_square(x, "exponent");
  const std::size_t n = x.rows();
  const double norm = frobenius_norm(x);

  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const long double scale = std::ldexp(1.0L, -squarings);

  constexpr int kDegree = 18;
  constexpr int kBlock = 4;
  std::array<long double, kDegree + 1> coeff{};
  coeff[0] = 1.0L;
  for (int k = 1; k <= kDegree; ++k) coeff[k] = coeff[k - 1] / k;

  // powers[j] = Y^j for j = 0..kBlock
  std::vector<WideMatrix> powers{WideMatrix::identity(n), WideMatrix(n)};
  for (std::size_t k = 0; k < n * n; ++k) {
    powers[1].re[k] = x.data()[k].real() * scale;
    powers[1].im[k] = x.data()[k].imag() * scale;
  }
  for (int j = 2; j <= kBlock; ++j) powers.push_back(powers[j - 1] * powers[1]);

  // Horner in Y^kBlock over blocks of kBlock coefficients.
  constexpr int kTop = kDegree / kBlock;
  WideMatrix sum(n);
  for (int b = kTop; b >= 0; --b) {
    if (b != kTop) sum = sum * powers[kBlock];
    for (int j = 0; j < kBlock && b * kBlock + j <= kDegree; ++j) sum.add_scaled(powers[j], coeff[b * kBlock + j]);
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;

  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n * n; ++k) {
    out.data()[k] = Complex(static_cast<double>(sum.re[k]), static_cast<double>(sum.im[k]));
  }
  return out;
}

}  // namespace acp
