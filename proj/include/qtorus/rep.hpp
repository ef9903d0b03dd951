#pragma once

// The irreducible n-dimensional representations of the quantum torus with
// exact root-of-unity parameters: l -> L (cyclic shift with a = q^alpha in
// the corner), m -> M (diagonal with entries q^(rho_exp - 2i)). Within the
// group of n-th roots of unity the n-th power map is trivial, so the exact
// backend carries b = (q^rho_exp)^n = 1; rho_exp still selects the root
// b^(1/n) freely, and the canonical representation is alpha = rho_exp = 0.

#include <cstddef>
#include <optional>
#include <vector>

#include "qtorus/matrix.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

class RepParams {
 public:
  explicit RepParams(CycParams params, int alpha = 0, int rho_exp = 0)
      : params_(params),
        alpha_(static_cast<int>(detail::mod_floor(alpha, params.n()))),
        rho_exp_(static_cast<int>(detail::mod_floor(rho_exp, params.n()))) {}

  const CycParams& params() const { return params_; }
  int alpha() const { return alpha_; }
  int rho_exp() const { return rho_exp_; }

  bool is_canonical() const { return alpha_ == 0 && rho_exp_ == 0; }

  friend bool operator==(const RepParams&, const RepParams&) = default;

 private:
  CycParams params_;
  int alpha_;    // a = q^alpha
  int rho_exp_;  // b^(1/n) = q^rho_exp, so b = 1
};

struct RepMatrixPair {
  CycMatrix L;
  CycMatrix M;
};

/// L has a = q^alpha at (0, n-1) and ones on the subdiagonal; M is
/// diagonal with (i,i) = q^(rho_exp - 2i). They satisfy L^n = a I,
/// M^n = I, and L M = q^2 M L.
inline RepMatrixPair build_generators(const RepParams& rp) {
  const CycParams& params = rp.params();
  const std::size_t n = static_cast<std::size_t>(params.n());
  CycMatrix L(params);
  L.at(0, n - 1) = CycNum::q_power(params, rp.alpha());
  for (std::size_t i = 1; i < n; ++i) L.at(i, i - 1) = CycNum(params, 1);
  CycMatrix M(params);
  for (std::size_t i = 0; i < n; ++i) {
    M.at(i, i) = CycNum::q_power(params, rp.rho_exp() - 2 * static_cast<long long>(i));
  }
  return {std::move(L), std::move(M)};
}

namespace detail {

inline std::vector<CycMatrix> matrix_powers(const CycMatrix& a) {
  std::vector<CycMatrix> p;
  p.reserve(a.dim());
  p.push_back(CycMatrix::identity(a.params()));
  for (std::size_t i = 1; i < a.dim(); ++i) p.push_back(p.back() * a);
  return p;
}

}  // namespace detail

/// Precomputed powers of L and M so that basis images are a single
/// product. Used wherever many images of the same representation are
/// needed (verification, witnesses, the homomorphism law).
class RepImages {
 public:
  explicit RepImages(const RepParams& rp)
      : rp_(rp),
        gens_(build_generators(rp)),
        l_powers_(detail::matrix_powers(gens_.L)),
        m_powers_(detail::matrix_powers(gens_.M)) {}

  const RepParams& rep_params() const { return rp_; }
  const RepMatrixPair& generators() const { return gens_; }

  /// rho(e_{r,s}) = q^(-rs) L^r M^s for arbitrary lattice indices;
  /// negatives resolve through L^n = a I and M^n = I before powering.
  CycMatrix image(long long r, long long s) const {
    const CycParams& params = rp_.params();
    const long long n = params.n();
    const long long r0 = detail::mod_floor(r, n);
    const long long s0 = detail::mod_floor(s, n);
    const long long wraps = (r - r0) / n;  // L^r = a^wraps L^r0
    long long scalar = -detail::mod_floor(r, n) * detail::mod_floor(s, n) +
                       rp_.alpha() * detail::mod_floor(wraps, n);
    // q^(-rs): rs mod n survives reduction of each factor mod n.
    CycMatrix m = l_powers_[static_cast<std::size_t>(r0)] *
                  m_powers_[static_cast<std::size_t>(s0)];
    return CycNum::q_power(params, scalar) * m;
  }

 private:
  RepParams rp_;
  RepMatrixPair gens_;
  std::vector<CycMatrix> l_powers_;
  std::vector<CycMatrix> m_powers_;
};

/// Exact image matrix of a single basis symbol.
inline CycMatrix rho_basis(const RepParams& rp, long long r, long long s) {
  return RepImages(rp).image(r, s);
}

struct UnitWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  bool ok = false;
};

struct WitnessReport {
  bool projector_ok = false;          // sum_i (q^-rho M)^i == n E_{0,0}
  std::vector<UnitWitness> units;     // all n^2 matrix units reached

  bool all_ok() const {
    if (!projector_ok) return false;
    for (const auto& u : units) {
      if (!u.ok) return false;
    }
    return true;
  }
};

/// Constructive surjectivity certificate: builds n E_{0,0} from powers of
/// M, then walks E_{i,0} = L^i E_{0,0} and E_{i,n-k} = a^-1 E_{i,0} L^k,
/// checking each product against the canonical matrix unit.
inline WitnessReport matrix_unit_witness(const RepParams& rp) {
  const CycParams& params = rp.params();
  const std::size_t n = static_cast<std::size_t>(params.n());
  const RepMatrixPair gens = build_generators(rp);

  WitnessReport report;
  // b^(-1/n) M = q^(-rho) M has the projector property regardless of the
  // chosen root.
  const CycMatrix m1 = CycNum::q_power(params, -rp.rho_exp()) * gens.M;
  CycMatrix sum(params);
  CycMatrix power = CycMatrix::identity(params);
  for (std::size_t i = 0; i < n; ++i) {
    sum += power;
    power = power * m1;
  }
  report.projector_ok =
      sum == Integer(params.n()) * CycMatrix::matrix_unit(params, {0, 0});

  const CycNum a_inv = CycNum::q_power(params, -rp.alpha());
  CycMatrix row_seed = CycMatrix::matrix_unit(params, {0, 0});
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) row_seed = gens.L * row_seed;  // L^i E_{0,0}
    report.units.push_back(
        {i, 0, row_seed == CycMatrix::matrix_unit(params, {i, 0})});
    CycMatrix chain = row_seed;
    for (std::size_t k = 1; k < n; ++k) {
      chain = chain * gens.L;  // E_{i,0} L^k, corrected by a^-1 once
      const std::size_t col = n - k;
      report.units.push_back(
          {i, col,
           a_inv * chain == CycMatrix::matrix_unit(params, {i, col})});
    }
  }
  return report;
}

/// Fixedness congruences for mu_n-valued parameters (a, b) =
/// (q^alpha, q^beta): B fixes rho_{a,b} iff a*alpha + b*beta = alpha and
/// c*alpha + d*beta = beta, both mod n.
inline bool fixed_congruence_holds(long long n, long long alpha, long long beta,
                                   const SL2Matrix& B) {
  return detail::mod_floor(B.a * alpha + B.b * beta - alpha, n) == 0 &&
         detail::mod_floor(B.c * alpha + B.d * beta - beta, n) == 0;
}

/// The exact backend carries beta = 0.
inline bool is_fixed_by(const RepParams& rp, const SL2Matrix& B) {
  return fixed_congruence_holds(rp.params().n(), rp.alpha(), 0, B);
}

/// |det(B - I)| = |2 - tr B|, the bound on the order of the roots of
/// unity a, b in any representation fixed by B. Inapplicable (nullopt)
/// when 1 is an eigenvalue of B.
inline std::optional<long long> fixed_order_bound(const SL2Matrix& B) {
  const long long det = 2 - B.a - B.d;
  if (det == 0) return std::nullopt;
  return det < 0 ? -det : det;
}

}  // namespace qtorus
