#pragma once

// Construction and analysis of the conjugating matrix C(B) that implements
// the automorphism of B in SL2(Z) on the canonical representation: the
// explicit entry formula C = (q^(-b^-1 d (i-aj)^2 - 2cj(i-aj) - acj^2))
// when the upper-right entry of B is a unit mod n, a composed fallback
// C(BT) C(T)* otherwise, the diagonal invariant K_B, the Gauss-sum trace
// identity, the CC* = nu I scaling, exact determinants, and the projective
// cocycle scalar on products.

#include <complex>
#include <cmath>
#include <optional>
#include <utility>

#include "qtorus/cyclotomic.hpp"
#include "qtorus/matrix.hpp"
#include "qtorus/numtheory.hpp"
#include "qtorus/rep.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

/// K_B = -(b^-1 d (1-a)^2 + c (2-a)) mod n, the quadratic coefficient on
/// C's diagonal. Undefined (nullopt) when n divides b.
inline std::optional<long long> k_b(const SL2Matrix& B, const CycParams& params) {
  const long long n = params.n();
  const long long bm = detail::mod_floor(B.b, n);
  if (bm == 0) return std::nullopt;
  const long long binv = mod_inverse(bm, n);
  const long long dm = detail::mod_floor(B.d, n);
  const long long cm = detail::mod_floor(B.c, n);
  const long long u = detail::mod_floor(1 - B.a, n);
  const long long v = detail::mod_floor(2 - B.a, n);
  return detail::mod_floor(-(binv * dm % n * (u * u % n) + cm * v), n);
}

/// The theorem's entry formula, requiring gcd(b, n) = 1.
inline PowMatrix conj_direct(const SL2Matrix& B, const CycParams& params) {
  const long long n = params.n();
  const long long bm = detail::mod_floor(B.b, n);
  if (bm == 0) {
    throw std::invalid_argument("conj_direct: upper-right entry of B is 0 mod n");
  }
  const long long binv = mod_inverse(bm, n);
  const long long am = detail::mod_floor(B.a, n);
  const long long cm = detail::mod_floor(B.c, n);
  const long long dm = detail::mod_floor(B.d, n);
  std::vector<std::vector<long long>> exps(static_cast<std::size_t>(n),
                                           std::vector<long long>(static_cast<std::size_t>(n)));
  for (long long i = 0; i < n; ++i) {
    for (long long j = 0; j < n; ++j) {
      const long long u = detail::mod_floor(i - am * j, n);  // i - aj mod n
      const long long quad = binv * dm % n * (u * u % n) % n;
      const long long cross = 2 * cm % n * (j * u % n) % n;
      const long long corner = am * cm % n * (j * j % n) % n;
      exps[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          detail::mod_floor(-(quad + cross + corner), n);
    }
  }
  return PowMatrix(params, std::move(exps));
}

enum class PathKind { direct, composed };

struct ConjPath {
  PathKind kind = PathKind::direct;
  // For the composed path, the pair (B*T, T) whose matrices were combined.
  std::optional<std::pair<SL2Matrix, SL2Matrix>> factors;

  friend bool operator==(const ConjPath&, const ConjPath&) = default;
};

struct ConjResult {
  CycMatrix C;
  std::optional<PowMatrix> C_pow;  // present exactly on the direct path
  CycNum nu;                       // the scalar with C C* = nu I
  ConjPath path;
};

/// Conjugating matrix for any B. Direct formula when gcd(b, n) = 1, with
/// nu = n. Otherwise det B = 1 and n | b force a != 0 mod n, so B*T has a
/// unit upper-right entry; C := C(B*T) C(T)* picks up nu = n^2 and the
/// scalar ambiguity is irrelevant projectively.
inline ConjResult conj_any(const SL2Matrix& B, const CycParams& params) {
  if (detail::mod_floor(B.b, params.n()) != 0) {
    PowMatrix pm = conj_direct(B, params);
    return {pm.to_cyc(), pm, CycNum(params, params.n()), {PathKind::direct, {}}};
  }
  const SL2Matrix t = SL2Matrix::T();
  const SL2Matrix bt = B * t;
  const CycMatrix c = conj_direct(bt, params).to_cyc() *
                      conj_direct(t, params).ctranspose().to_cyc();
  return {c, std::nullopt, CycNum(params, Integer(params.n()) * params.n()),
          {PathKind::composed, std::make_pair(bt, t)}};
}

enum class Orientation { left, right, both, none };

struct ConjugationCheck {
  bool ok = false;
  Orientation orientation = Orientation::none;
};

/// Tests the inverse-free conjugation identities against every basis
/// image: left is C rho(e_{r,s}) = rho(B e_{r,s}) C, right is the mirror.
/// Both are tried so no convention is assumed; ok means one orientation
/// holds for all n^2 basis elements.
inline ConjugationCheck verify_conjugation(const CycMatrix& C, const SL2Matrix& B,
                                           const RepParams& rp) {
  const RepImages images(rp);
  const long long n = rp.params().n();
  bool left = true;
  bool right = true;
  for (long long r = 0; r < n && (left || right); ++r) {
    for (long long s = 0; s < n && (left || right); ++s) {
      const CycMatrix p = images.image(r, s);
      const BasisIndex moved = B.apply({r, s});
      const CycMatrix q = images.image(moved.r, moved.s);
      if (left && !(C * p == q * C)) left = false;
      if (right && !(p * C == C * q)) right = false;
    }
  }
  if (left && right) return {true, Orientation::both};
  if (left) return {true, Orientation::left};
  if (right) return {true, Orientation::right};
  return {false, Orientation::none};
}

/// The scalar nu with C C* = nu I, if C C* is scalar at all.
inline std::optional<CycNum> cc_star_scalar(const CycMatrix& C) {
  return proportionality_scalar(C * ctranspose(C), CycMatrix::identity(C.params()));
}

struct CocycleResult {
  CycNum lambda;             // C(B1) C(B2) = lambda C(B1 B2)
  Integer expected_modulus;  // nu1 nu2 / nu12, a power of n
  bool modulus_ok = false;   // lambda conj(lambda) == expected_modulus
  ConjPath path1, path2, path12;
};

/// Measures the projective defect on a product. Proportionality failure
/// would be a defect in the construction and comes back as nullopt.
inline std::optional<CocycleResult> cocycle_scalar(const SL2Matrix& B1,
                                                   const SL2Matrix& B2,
                                                   const CycParams& params) {
  const ConjResult r1 = conj_any(B1, params);
  const ConjResult r2 = conj_any(B2, params);
  const ConjResult r12 = conj_any(B1 * B2, params);
  const std::optional<CycNum> lambda =
      proportionality_scalar(r1.C * r2.C, r12.C);
  if (!lambda) return std::nullopt;
  const auto nu_int = [&](const ConjResult& r) {
    return *r.nu.as_integer();
  };
  const Integer expected = nu_int(r1) * nu_int(r2) / nu_int(r12);
  const bool ok = *lambda * lambda->conj() == CycNum(params, expected);
  return CocycleResult{*lambda, expected, ok, r1.path, r2.path, r12.path};
}

struct ConjugationReport {
  ConjugationReport(const SL2Matrix& B_, const CycParams& params_)
      : B(B_), params(params_), C(params_), nu(params_),
        trace_exact(params_), det_exact(params_) {}

  SL2Matrix B;
  CycParams params;
  ConjPath path;
  CycMatrix C;
  std::optional<PowMatrix> C_pow;

  CycNum nu;              // measured from C C*; zero if C C* is not scalar
  bool cc_star_ok = false;

  std::optional<long long> K_B;                  // defined iff direct path
  std::optional<LegendreClass> legendre_K;

  CycNum trace_exact;
  std::optional<bool> trace_identity_ok;         // direct path only
  std::complex<double> trace_numeric;
  std::optional<bool> trace_closed_form_ok;      // direct path, q_exp = 1

  CycNum det_exact;
  std::optional<bool> det_modulus_ok;            // direct path only
  std::complex<double> det_phase_numeric;        // embed(det) / n^(n/2)

  bool conjugation_ok = false;
  Orientation orientation = Orientation::none;

  std::complex<double> trace_det_ratio_numeric;  // Tr(C) / det(C)^(1/n)

  bool all_checks_pass() const {
    return conjugation_ok && cc_star_ok &&
           trace_identity_ok.value_or(true) &&
           trace_closed_form_ok.value_or(true) &&
           det_modulus_ok.value_or(true);
  }

  friend bool operator==(const ConjugationReport&, const ConjugationReport&) = default;
};

/// Full exact-and-numeric analysis of the conjugator of one B.
inline ConjugationReport analyze(const SL2Matrix& B, const CycParams& params) {
  const long long n = params.n();
  ConjResult conj = conj_any(B, params);
  ConjugationReport report(B, params);
  report.path = conj.path;
  report.C = conj.C;
  report.C_pow = conj.C_pow;

  const std::optional<CycNum> nu = cc_star_scalar(conj.C);
  report.nu = nu.value_or(CycNum(params));
  report.cc_star_ok = nu.has_value() && *nu == conj.nu;

  report.K_B = k_b(B, params);
  if (report.K_B) {
    report.legendre_K = *report.K_B == 0
                            ? LegendreClass::zero_class
                            : (legendre(*report.K_B, n) == 1 ? LegendreClass::plus_one
                                                             : LegendreClass::minus_one);
  }

  report.trace_exact = mat_trace(conj.C);
  report.trace_numeric = report.trace_exact.embed();
  if (conj.path.kind == PathKind::direct) {
    const long long kb = *report.K_B;
    if (kb == 0) {
      report.trace_identity_ok = report.trace_exact == CycNum(params, n);
    } else {
      const Integer sign = legendre(kb, n);
      report.trace_identity_ok =
          report.trace_exact == sign * gauss_sum_exact(params, 1);
    }
    if (params.q_exp() == 1) {
      const std::complex<double> closed =
          kb == 0 ? std::complex<double>(static_cast<double>(n), 0.0)
                  : static_cast<double>(legendre(kb, n)) * gauss_closed_numeric(n);
      report.trace_closed_form_ok = std::abs(report.trace_numeric - closed) < 1e-9;
    }
  }

  report.det_exact = mat_det(conj.C);
  if (conj.path.kind == PathKind::direct) {
    const Integer n_to_n = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(n));
    report.det_modulus_ok =
        report.det_exact * report.det_exact.conj() == CycNum(params, n_to_n);
  }
  const std::complex<double> det_numeric = report.det_exact.embed();
  report.det_phase_numeric =
      det_numeric / std::pow(static_cast<double>(n), static_cast<double>(n) / 2.0);

  const ConjugationCheck check = verify_conjugation(conj.C, B, RepParams(params));
  report.conjugation_ok = check.ok;
  report.orientation = check.orientation;

  report.trace_det_ratio_numeric =
      report.trace_numeric / std::pow(det_numeric, 1.0 / static_cast<double>(n));
  return report;
}

}  // namespace qtorus
