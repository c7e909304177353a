#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace acp {

enum class ErrorKind {
  NonSquare,
  BadDimension,
  NonFinite,
  DimensionMismatch,
  NotHermitian,
  NotInvolution,
  NoConvergence,
  OddDimension,
  UnbalancedSpectrum,
  CertificationFailed,
  TruncationNotConverged,
  ParseError,
  IoError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::UnbalancedSpectrum: return "UnbalancedSpectrum";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::TruncationNotConverged: return "TruncationNotConverged";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so that
/// callers (notably the CLI exit-code mapping) can dispatch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace acp
