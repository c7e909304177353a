#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace acp {

/// Seeded, counter-based 64-bit generator. The stream is fixed by this exact
/// algorithm, so equal seeds give equal streams on every platform:
///
///   key      = mix(seed ^ 0x6a09e667f3bcc909)
///   output_k = mix(key + k * 0x9e3779b97f4a7c15),  k = 1, 2, ...
///
/// where mix is the SplitMix64 finalizer. Substreams come from split(), which
/// derives a fresh key from (key, stream id) and restarts the counter.
///
/// Gaussian draws use Box-Muller and therefore inherit the platform libm's
/// log/cos/sin; the integer and uniform streams are bit-exact everywhere.
///
/// A RandomSource is single-owner; hand independent substreams to threads.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) noexcept : seed_(seed), key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

  std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix(key_ + counter_ * kGamma);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection keeps the result unbiased.
    for (;;) {
      const unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
      const auto low = static_cast<std::uint64_t>(m);
      if (low >= bound || low >= (0 - bound) % bound) return static_cast<std::uint64_t>(m >> 64);
    }
  }

  /// Standard complex Gaussian: real and imaginary parts i.i.d. N(0, 1/2).
  std::complex<double> complex_normal() noexcept {
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double r = std::sqrt(-std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  double normal() noexcept { return std::numbers::sqrt2 * complex_normal().real(); }

  /// Uniform point in the closed disk of the given radius.
  std::complex<double> in_disk(double radius) noexcept {
    const double r = radius * std::sqrt(uniform());
    const double theta = 2.0 * std::numbers::pi * uniform();
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  RandomSource split(std::uint64_t stream) const noexcept {
    RandomSource child(seed_);
    child.key_ = mix(key_ ^ mix(stream + kGamma));
    return child;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace acp
