// Minimal library walkthrough: build the conjugating matrix of one
// SL2(Z) element, verify the conjugation identity against the canonical
// representation, and print the exact trace and determinant invariants.

#include <iostream>

#include "qtorus/conjugator.hpp"

int main() {
  using namespace qtorus;

  const CycParams params(5);              // Z[zeta_5], q = zeta
  const SL2Matrix B = SL2Matrix::S() * SL2Matrix::T();

  const ConjResult res = conj_any(B, params);
  std::cout << "B = " << B.to_string() << ", path "
            << (res.path.kind == PathKind::direct ? "direct" : "composed") << "\n";
  if (res.C_pow) {
    std::cout << "C as exponents of q:\n" << res.C_pow->to_string();
  }

  const ConjugationCheck check = verify_conjugation(res.C, B, RepParams(params));
  std::cout << "conjugation identity holds: " << (check.ok ? "yes" : "no") << "\n";

  const auto kb = k_b(B, params);
  std::cout << "K_B = " << *kb << ", trace = " << mat_trace(res.C).to_string()
            << ", |trace| ~ " << std::abs(mat_trace(res.C).embed()) << "\n";

  const CycNum det = mat_det(res.C);
  std::cout << "det = " << det.to_string() << ", |det|^2 = "
            << (det * det.conj()).to_string() << "\n";
  return 0;
}
