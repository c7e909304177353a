#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>

#include "acp/acp.hpp"

namespace acp::cli {

// Exit-code contract shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsageError = 2;

inline int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian:
    case ErrorKind::NotInvolution:
    case ErrorKind::NoConvergence:
    case ErrorKind::UnbalancedSpectrum:
    case ErrorKind::CertificationFailed:
    case ErrorKind::TruncationNotConverged:
      return kDomainFailure;
    default:
      return kUsageError;
  }
}

/// Parses "re,im": two decimals separated by one comma, no spaces.
inline std::optional<Complex> parse_complex(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto parse = [](std::string_view s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
    return v;
  };
  const auto re = parse(text.substr(0, comma));
  const auto im = parse(text.substr(comma + 1));
  if (!re || !im) return std::nullopt;
  return Complex(*re, *im);
}

/// Tolerance used when --tol is absent: ACP_DEFAULT_TOL if set, else 1e-10.
inline double default_tolerance() {
  const char* env = std::getenv("ACP_DEFAULT_TOL");
  if (env == nullptr || *env == '\0') return kDefaultTol;
  const std::string_view s(env);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorKind::ParseError, "ACP_DEFAULT_TOL must be a positive decimal, got \"" + std::string(s) + "\"");
  }
  return v;
}

enum class Method { Random, Canonical, PauliChain };
enum class Form { Auto, Involution, Product, KronPair, Nilpotent, Oracle };
enum class LiftOp { Kron, DirSum, Star };

struct Config {
  std::optional<double> tol;
  // generate
  Method method = Method::Canonical;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  // shared paths
  std::string a_path, b_path, c_path, in_path, out_path, out_a, out_b, report_path;
  // lift
  LiftOp op = LiftOp::Kron;
  // expm
  Form form = Form::Auto;
  std::string z_text = "1,0";
  bool nilpotent_flag = false;

  double tolerance() const { return tol ? *tol : default_tolerance(); }
};

inline std::string certification_line(const InvolutionPair& p) {
  const VerificationReport r = verify_pair(p.a(), p.b(), p.certified_tol());
  return "certified n=" + std::to_string(p.dimension()) + " tol=" + format_double(p.certified_tol()) +
         " max_residual=" + format_double(r.max_residual()) + "\n";
}

inline int cmd_generate(const Config& cfg, std::ostream& out) {
  const double tol = cfg.tolerance();
  std::optional<InvolutionPair> pair;
  switch (cfg.method) {
    case Method::Canonical:
      pair = canonical_pair(cfg.size, tol);
      break;
    case Method::Random: {
      RandomSource rng(cfg.seed);
      pair = random_pair(cfg.size, rng, tol);
      break;
    }
    case Method::PauliChain:
      pair = pauli_chain(cfg.size, tol);
      break;
  }
  write_matrix(pair->a(), cfg.out_a);
  write_matrix(pair->b(), cfg.out_b);
  out << certification_line(*pair);
  return kOk;
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
  const ComplexMatrix a = read_matrix(cfg.a_path);
  const ComplexMatrix b = read_matrix(cfg.b_path);
  const VerificationReport report = verify_pair(a, b, cfg.tolerance());
  if (!cfg.report_path.empty()) write_report(report, cfg.report_path);
  out << format_report(report);
  return report.passed ? kOk : kDomainFailure;
}

inline int cmd_derive(const Config& cfg, std::ostream& out) {
  const double tol = cfg.tolerance();
  const ComplexMatrix a = read_matrix(cfg.in_path);
  const ComplexMatrix b = derive_partner(a, tol);
  write_matrix(b, cfg.out_path);
  out << format_report(verify_pair(a, b, tol));
  return kOk;
}

inline int cmd_lift(const Config& cfg, std::ostream& out) {
  const double tol = cfg.tolerance();
  const InvolutionPair p = InvolutionPair::certify(read_matrix(cfg.a_path), read_matrix(cfg.b_path), tol);
  std::optional<InvolutionPair> lifted;
  switch (cfg.op) {
    case LiftOp::Kron:
      if (cfg.c_path.empty()) throw Error(ErrorKind::ParseError, "--c is required for --op kron");
      lifted = lift_kron(read_matrix(cfg.c_path), p, tol);
      break;
    case LiftOp::DirSum:
      lifted = lift_direct_sum(p);
      break;
    case LiftOp::Star:
      lifted = lift_star(p);
      break;
  }
  write_matrix(lifted->a(), cfg.out_a);
  write_matrix(lifted->b(), cfg.out_b);
  out << certification_line(*lifted);
  return kOk;
}

inline std::string_view form_name(Form f) {
  switch (f) {
    case Form::Auto: return "auto";
    case Form::Involution: return "involution";
    case Form::Product: return "product";
    case Form::KronPair: return "kron-pair";
    case Form::Nilpotent: return "nilpotent";
    case Form::Oracle: return "oracle";
  }
  return "?";
}

inline int cmd_expm(const Config& cfg, std::ostream& out) {
  const double tol = cfg.tolerance();
  const auto z = parse_complex(cfg.z_text);
  if (!z) throw Error(ErrorKind::ParseError, "--z must look like re,im (e.g. 1.5,0), got \"" + cfg.z_text + "\"");
  const ComplexMatrix a = read_matrix(cfg.a_path);
  std::optional<ComplexMatrix> b;
  if (!cfg.b_path.empty()) b = read_matrix(cfg.b_path);

  Form form = cfg.form;
  if (form == Form::Auto) {
    if (b && cfg.nilpotent_flag) {
      form = Form::Nilpotent;
    } else if (b) {
      form = Form::Product;
    } else if (a.is_square() && involution_residual(a) <= tol) {
      form = Form::Involution;
    } else {
      form = Form::Oracle;
    }
  }
  auto pair = [&]() {
    if (!b) throw Error(ErrorKind::ParseError, "--form " + std::string(form_name(form)) + " needs --b");
    return InvolutionPair::certify(a, *b, tol);
  };

  ComplexMatrix result(1, 1);
  ComplexMatrix reference(1, 1);
  switch (form) {
    case Form::Involution:
      result = exp_involution(a, *z, tol);
      reference = expm_oracle(*z * a);
      break;
    case Form::Product: {
      const InvolutionPair p = pair();
      result = exp_product(p, *z);
      reference = expm_oracle(*z * (p.a() * p.b()));
      break;
    }
    case Form::KronPair: {
      const InvolutionPair p = pair();
      result = exp_kron_pair(p, *z);
      reference = expm_oracle(*z * kron(p.a(), p.b()));
      break;
    }
    case Form::Nilpotent: {
      const InvolutionPair p = pair();
      result = exp_nilpotent(p, *z);
      reference = expm_oracle(*z * nilpotent(p));
      break;
    }
    case Form::Oracle:
    case Form::Auto:
      result = expm_oracle(*z * a);
      reference = result;
      break;
  }
  write_matrix(result, cfg.out_path);
  out << "form=" << form_name(form) << " oracle_relative_deviation=" << format_double(relative_error(result, reference))
      << "\n";
  return kOk;
}

inline int cmd_spectrum(const Config& cfg, std::ostream& out) {
  const ComplexMatrix h = read_matrix(cfg.in_path);
  const SpectralDecomposition eig = hermitian_eig(h, cfg.tolerance());
  std::size_t plus = 0;
  std::size_t minus = 0;
  out << "eigenvalues:";
  for (double v : eig.values) {
    out << ' ' << format_double(v);
    if (std::abs(v - 1.0) <= 1e-8) ++plus;
    if (std::abs(v + 1.0) <= 1e-8) ++minus;
  }
  out << "\ncount(+1): " << plus << "\ncount(-1): " << minus << "\n";
  return kOk;
}

/// Runs the tool on the given arguments (program name excluded).
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify anticommuting Hermitian involution pairs"};
  app.require_subcommand(1);
  Config cfg;

  const std::map<std::string, Method> methods{
      {"random", Method::Random}, {"canonical", Method::Canonical}, {"pauli-chain", Method::PauliChain}};
  const std::map<std::string, Form> forms{{"auto", Form::Auto},          {"involution", Form::Involution},
                                          {"product", Form::Product},    {"kron-pair", Form::KronPair},
                                          {"nilpotent", Form::Nilpotent}, {"oracle", Form::Oracle}};
  const std::map<std::string, LiftOp> ops{{"kron", LiftOp::Kron}, {"dirsum", LiftOp::DirSum}, {"star", LiftOp::Star}};

  auto add_tol = [&cfg](CLI::App* sub) {
    sub->add_option("--tol", cfg.tol, "verification tolerance (default 1e-10 or $ACP_DEFAULT_TOL)")
        ->check(CLI::PositiveNumber);
  };

  auto* generate = app.add_subcommand("generate", "write a certified pair A, B");
  generate->add_option("--method", cfg.method, "random | canonical | pauli-chain")
      ->required()
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  generate->add_option("--size", cfg.size, "dimension n")->required();
  generate->add_option("--seed", cfg.seed, "seed for --method random");
  generate->add_option("--out-a", cfg.out_a)->required();
  generate->add_option("--out-b", cfg.out_b)->required();
  add_tol(generate);

  auto* verify = app.add_subcommand("verify", "check A^2 = B^2 = I, hermiticity, AB + BA = 0");
  verify->add_option("--a", cfg.a_path)->required();
  verify->add_option("--b", cfg.b_path)->required();
  verify->add_option("--report", cfg.report_path, "also write the report to this file");
  add_tol(verify);

  auto* derive = app.add_subcommand("derive", "build a partner B for a traceless Hermitian involution A");
  derive->add_option("--in", cfg.in_path)->required();
  derive->add_option("--out", cfg.out_path)->required();
  add_tol(derive);

  auto* lift = app.add_subcommand("lift", "lift a pair to a higher dimension");
  lift->add_option("--op", cfg.op, "kron | dirsum | star")
      ->required()
      ->transform(CLI::CheckedTransformer(ops, CLI::ignore_case));
  lift->add_option("--a", cfg.a_path)->required();
  lift->add_option("--b", cfg.b_path)->required();
  lift->add_option("--c", cfg.c_path, "involution C for --op kron");
  lift->add_option("--out-a", cfg.out_a)->required();
  lift->add_option("--out-b", cfg.out_b)->required();
  add_tol(lift);

  auto* expm = app.add_subcommand("expm", "closed-form matrix exponential, checked against the oracle");
  expm->add_option("--form", cfg.form, "auto | involution | product | kron-pair | nilpotent | oracle")
      ->transform(CLI::CheckedTransformer(forms, CLI::ignore_case));
  expm->add_option("--a", cfg.a_path)->required();
  expm->add_option("--b", cfg.b_path);
  expm->add_option("--z", cfg.z_text, "complex scalar as re,im")->required();
  expm->add_flag("--nilpotent", cfg.nilpotent_flag, "with --form auto, exponentiate A + iB");
  expm->add_option("--out", cfg.out_path)->required();
  add_tol(expm);

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of a Hermitian matrix and its +-1 counts");
  spectrum->add_option("--in", cfg.in_path)->required();
  add_tol(spectrum);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (generate->parsed()) return cmd_generate(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (derive->parsed()) return cmd_derive(cfg, out);
    if (lift->parsed()) return cmd_lift(cfg, out);
    if (expm->parsed()) return cmd_expm(cfg, out);
    if (spectrum->parsed()) return cmd_spectrum(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsageError;
}

}  // namespace acp::cli
