#pragma once

// Text formats for matrices and verification reports.
//
// MatrixFile (one matrix per file, UTF-8, one row per line):
//
//   {"rows":2,"cols":2,"data":[
//   [[0,0],[1,0]],
//   [[1,0],[0,0]]
//   ]}
//
// Entry (i, j) is [re, im]. Doubles are printed in shortest round-trip form,
// so reading a written file reproduces every bit, including the sign of zero.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "acp/complex_matrix.hpp"
#include "acp/pair.hpp"

namespace acp {

inline constexpr std::string_view kToolVersion = "acp 0.1.0";

/// Shortest decimal that parses back to the same double. Negative zero is
/// written as "-0.0" because a bare "-0" reads back as the integer 0.
inline std::string format_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "cannot serialize a non-finite value");
  if (x == 0.0) return std::signbit(x) ? "-0.0" : "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string format_matrix(const ComplexMatrix& m) {
  std::string out = "{\"rows\":" + std::to_string(m.rows()) + ",\"cols\":" + std::to_string(m.cols()) + ",\"data\":[\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += '[' + format_double(m(i, j).real()) + ',' + format_double(m(i, j).imag()) + ']';
    }
    out += (i + 1 < m.rows()) ? "],\n" : "]\n";
  }
  out += "]}\n";
  return out;
}

namespace detail {

inline nlohmann::json parse_json(std::string_view text) {
  try {
    return nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                                           e.what());
  } catch (const nlohmann::json::exception& e) {
    // Number overflow such as 1e999 surfaces as out_of_range.
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline double as_finite(const nlohmann::json& v, std::string_view where) {
  if (!v.is_number()) throw Error(ErrorKind::ParseError, std::string(where) + " is not a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw Error(ErrorKind::ParseError, std::string(where) + " is not finite");
  return x;
}

inline std::size_t as_dimension(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_unsigned() || obj[key].get<std::size_t>() == 0) {
    throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a positive integer");
  }
  return obj[key].get<std::size_t>();
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void dump(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write to " + path + " failed");
}

}  // namespace detail

inline ComplexMatrix parse_matrix(std::string_view text) {
  const nlohmann::json doc = detail::parse_json(text);
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "matrix file must hold a JSON object");
  const std::size_t rows = detail::as_dimension(doc, "rows");
  const std::size_t cols = detail::as_dimension(doc, "cols");
  if (!doc.contains("data") || !doc["data"].is_array()) throw Error(ErrorKind::ParseError, "\"data\" must be an array");
  const auto& data = doc["data"];
  if (data.size() != rows) {
    throw Error(ErrorKind::DimensionMismatch,
                "declared " + std::to_string(rows) + " rows, found " + std::to_string(data.size()));
  }
  std::vector<Complex> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = data[i];
    if (!row.is_array()) throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " is not an array");
    if (row.size() != cols) {
      throw Error(ErrorKind::DimensionMismatch, "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                                    " entries, declared " + std::to_string(cols));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& e = row[j];
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, where + " must be [re, im]");
      entries.emplace_back(detail::as_finite(e[0], where), detail::as_finite(e[1], where));
    }
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

inline ComplexMatrix read_matrix(const std::string& path) { return parse_matrix(detail::slurp(path)); }

inline void write_matrix(const ComplexMatrix& m, const std::string& path) { detail::dump(path, format_matrix(m)); }

/// ReportFile: fixed field order, full-precision residuals.
inline std::string format_report(const VerificationReport& r) {
  std::string out = "{\n";
  auto field = [&out](std::string_view key, const std::string& value, bool last = false) {
    out += "  \"";
    out += key;
    out += "\": " + value + (last ? "\n" : ",\n");
  };
  field("residual_hermitian_a", format_double(r.residual_hermitian_a));
  field("residual_hermitian_b", format_double(r.residual_hermitian_b));
  field("residual_involution_a", format_double(r.residual_involution_a));
  field("residual_involution_b", format_double(r.residual_involution_b));
  field("residual_anticommute", format_double(r.residual_anticommute));
  field("trace_ab_abs", format_double(r.trace_ab_abs));
  field("tol", format_double(r.tol));
  field("passed", r.passed ? "true" : "false");
  field("version", nlohmann::json(std::string(kToolVersion)).dump(), true);
  out += "}\n";
  return out;
}

inline VerificationReport parse_report(std::string_view text) {
  const nlohmann::json doc = detail::parse_json(text);
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "report file must hold a JSON object");
  auto number = [&doc](const char* key) {
    if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing \"") + key + "\"");
    return detail::as_finite(doc[key], key);
  };
  VerificationReport r;
  r.residual_hermitian_a = number("residual_hermitian_a");
  r.residual_hermitian_b = number("residual_hermitian_b");
  r.residual_involution_a = number("residual_involution_a");
  r.residual_involution_b = number("residual_involution_b");
  r.residual_anticommute = number("residual_anticommute");
  r.trace_ab_abs = number("trace_ab_abs");
  r.tol = number("tol");
  if (!doc.contains("passed") || !doc["passed"].is_boolean()) {
    throw Error(ErrorKind::ParseError, "\"passed\" must be a boolean");
  }
  r.passed = doc["passed"].get<bool>();
  if (!doc.contains("version") || !doc["version"].is_string()) {
    throw Error(ErrorKind::ParseError, "\"version\" must be a string");
  }
  if (!r.consistent()) throw Error(ErrorKind::ParseError, "\"passed\" disagrees with residuals and tol");
  return r;
}

inline VerificationReport read_report(const std::string& path) { return parse_report(detail::slurp(path)); }

inline void write_report(const VerificationReport& r, const std::string& path) {
  detail::dump(path, format_report(r));
}

}  // namespace acp
