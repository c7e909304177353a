#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acp/error.hpp"

namespace acp {

using Complex = std::complex<double>;

/// Dense row-major matrix of complex doubles. Dimensions are always positive
/// and every entry admitted through a constructor must be finite.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    check_shape();
  }

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    check_shape();
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count " + std::to_string(data_.size()) +
                                                    " does not match " + std::to_string(rows_) + "x" +
                                                    std::to_string(cols_));
    }
    if (!is_finite()) throw Error(ErrorKind::NonFinite, "non-finite entry");
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    check_shape();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!is_finite()) throw Error(ErrorKind::NonFinite, "non-finite entry");
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

  static ComplexMatrix diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const noexcept { return data_; }
  std::span<Complex> data() noexcept { return data_; }

  bool is_finite() const noexcept {
    for (const auto& z : data_) {
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
  }

  ComplexMatrix& operator+=(const ComplexMatrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& other) {
    require_same_shape(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }

  ComplexMatrix& operator*=(Complex s) noexcept {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void check_shape() const {
    if (rows_ == 0 || cols_ == 0) throw Error(ErrorKind::BadDimension, "matrix dimensions must be positive");
  }

  void require_same_shape(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw Error(ErrorKind::DimensionMismatch, std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                                                    std::to_string(other.rows_) + "x" +
                                                    std::to_string(other.cols_));
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

inline ComplexMatrix operator+(ComplexMatrix x, const ComplexMatrix& y) { return x += y; }
inline ComplexMatrix operator-(ComplexMatrix x, const ComplexMatrix& y) { return x -= y; }
inline ComplexMatrix operator*(ComplexMatrix x, Complex s) { return x *= s; }
inline ComplexMatrix operator*(Complex s, ComplexMatrix x) { return x *= s; }

// 0 - z rather than -z keeps exact zeros positive, so negated constants serialize as "0".
inline ComplexMatrix operator-(ComplexMatrix x) {
  for (auto& z : x.data()) z = Complex(0.0 - z.real(), 0.0 - z.imag());
  return x;
}

inline ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.cols() != y.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "product of " + std::to_string(x.rows()) + "x" +
                                                  std::to_string(x.cols()) + " and " + std::to_string(y.rows()) +
                                                  "x" + std::to_string(y.cols()));
  }
  ComplexMatrix out(x.rows(), y.cols());
  const std::size_t inner = x.cols();
  const std::size_t m = y.cols();
  const Complex* yd = y.data().data();
  Complex* od = out.data().data();
  // i-k-j order with split real/imaginary arithmetic; std::complex's operator*
  // carries NaN recovery branches that block vectorization.
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Complex* orow = od + i * m;
    for (std::size_t k = 0; k < inner; ++k) {
      const double ar = x(i, k).real();
      const double ai = x(i, k).imag();
      if (ar == 0.0 && ai == 0.0) continue;
      const Complex* yrow = yd + k * m;
      for (std::size_t j = 0; j < m; ++j) {
        const double br = yrow[j].real();
        const double bi = yrow[j].imag();
        orow[j] = Complex(orow[j].real() + (ar * br - ai * bi), orow[j].imag() + (ar * bi + ai * br));
      }
    }
  }
  return out;
}

inline std::vector<Complex> operator*(const ComplexMatrix& x, std::span<const Complex> v) {
  if (x.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<Complex> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < x.cols(); ++j) acc += x(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

/// Conjugate transpose.
inline ComplexMatrix adjoint(const ComplexMatrix& x) {
  ComplexMatrix out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

inline ComplexMatrix transpose(const ComplexMatrix& x) {
  ComplexMatrix out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(j, i) = x(i, j);
  return out;
}

inline void require_square(const ComplexMatrix& x, std::string_view what = "matrix") {
  if (!x.is_square()) {
    throw Error(ErrorKind::NonSquare,
                std::string(what) + " is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

inline Complex trace(const ComplexMatrix& x) {
  require_square(x);
  Complex t = 0.0;
  for (std::size_t i = 0; i < x.rows(); ++i) t += x(i, i);
  return t;
}

inline double frobenius_norm(const ComplexMatrix& x) noexcept {
  double s = 0.0;
  for (const auto& z : x.data()) s += z.real() * z.real() + z.imag() * z.imag();
  return std::sqrt(s);
}

inline double frobenius_distance(const ComplexMatrix& x, const ComplexMatrix& y) { return frobenius_norm(x - y); }

/// ||x - y||_F / ||y||_F, falling back to the absolute distance when y vanishes.
inline double relative_error(const ComplexMatrix& x, const ComplexMatrix& reference) {
  const double denom = frobenius_norm(reference);
  const double diff = frobenius_distance(x, reference);
  return denom > 0.0 ? diff / denom : diff;
}

inline double hermitian_residual(const ComplexMatrix& x) {
  require_square(x);
  return frobenius_distance(x, adjoint(x));
}

/// Block (i, j) of the result is x(i, j) * y. Exact zeros come out as +0.
inline ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  const std::size_t yr = y.rows();
  const std::size_t yc = y.cols();
  ComplexMatrix out(x.rows() * yr, x.cols() * yc);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Complex s = x(i, j);
      for (std::size_t k = 0; k < yr; ++k)
        for (std::size_t l = 0; l < yc; ++l) out(i * yr + k, j * yc + l) = s * y(k, l) + Complex(0.0);
    }
  return out;
}

inline ComplexMatrix direct_sum(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_square(x, "left summand");
  require_square(y, "right summand");
  const std::size_t n = x.rows();
  ComplexMatrix out(n + y.rows(), n + y.rows());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.rows(); ++j) out(n + i, n + j) = y(i, j);
  return out;
}

/// Interleaved 4x4 embedding of a 2x2 matrix:
///
///   x11  0    0    x12
///   0    x11  x12  0
///   0    x21  x22  0
///   x21  0    0    x22
///
/// Permutation-similar to direct_sum(x, x).
inline ComplexMatrix star_embed(const ComplexMatrix& x) {
  if (x.rows() != 2 || x.cols() != 2) {
    throw Error(ErrorKind::BadDimension,
                "star embedding needs a 2x2 input, got " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  ComplexMatrix out(4, 4);
  out(0, 0) = x(0, 0);
  out(0, 3) = x(0, 1);
  out(1, 1) = x(0, 0);
  out(1, 2) = x(0, 1);
  out(2, 1) = x(1, 0);
  out(2, 2) = x(1, 1);
  out(3, 0) = x(1, 0);
  out(3, 3) = x(1, 1);
  return out;
}

inline std::vector<Complex> column(const ComplexMatrix& x, std::size_t j) {
  std::vector<Complex> v(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) v[i] = x(i, j);
  return v;
}

inline double vector_norm(std::span<const Complex> v) noexcept {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace acp
