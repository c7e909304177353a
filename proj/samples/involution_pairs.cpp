// Builds a random anticommuting pair, lifts it, and checks a few identities.
#include <iostream>

#include "acp/acp.hpp"

int main() {
  acp::RandomSource rng(2024);
  const acp::InvolutionPair p = acp::random_pair(4, rng);
  const acp::VerificationReport r = acp::verify_pair(p.a(), p.b(), p.certified_tol());
  std::cout << "n=4 pair, max residual " << r.max_residual() << ", |tr(AB)| " << r.trace_ab_abs << "\n";

  const acp::InvolutionPair lifted = acp::lift_kron(acp::pauli::sigma3(), p, p.certified_tol());
  std::cout << "lifted to n=" << lifted.dimension() << " at tol " << lifted.certified_tol() << "\n";

  const acp::ComplexMatrix b = acp::derive_partner(p.a(), 1e-10);
  std::cout << "derived partner passes: " << std::boolalpha << acp::verify_pair(p.a(), b, 1e-9).passed << "\n";

  const auto closed = acp::exp_product(p, {0.7, 0.2});
  const auto oracle = acp::expm_oracle(acp::Complex(0.7, 0.2) * (p.a() * p.b()));
  std::cout << "e^{zAB} closed form vs oracle: " << acp::relative_error(closed, oracle) << "\n";

  const auto n = acp::nilpotent(p);
  std::cout << "||N^2||_F = " << acp::frobenius_norm(n * n) << "\n";
}
