#pragma once

// The quantum torus W_q at a primitive n-th root of unity: basis symbols
// e_{r,s} indexed by the integer lattice, the product rule
// e_{p,t} e_{r,s} = q^(ps-rt) e_{p+r,t+s}, the SL2(Z) action
// e_{p,t} -> e_{ap+bt, cp+dt}, and center membership. Lattice indices are
// never reduced automatically; the action and product rule live on Z^2.

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qtorus/cyclotomic.hpp"

namespace qtorus {

struct BasisIndex {
  long long r = 0;
  long long s = 0;
  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

struct SL2Matrix {
  long long a, b, c, d;

  SL2Matrix(long long a_, long long b_, long long c_, long long d_)
      : a(a_), b(b_), c(c_), d(d_) {
    if (a * d - b * c != 1) {
      throw std::invalid_argument("SL2Matrix: determinant must be 1");
    }
  }

  static SL2Matrix identity() { return {1, 0, 0, 1}; }
  static SL2Matrix S() { return {0, -1, 1, 0}; }
  static SL2Matrix T() { return {1, 1, 0, 1}; }

  SL2Matrix inverse() const { return {d, -b, -c, a}; }

  BasisIndex apply(BasisIndex e) const {
    return {a * e.r + b * e.s, c * e.r + d * e.s};
  }

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;

  std::string to_string() const {
    return "[" + std::to_string(a) + "," + std::to_string(b) + ";" +
           std::to_string(c) + "," + std::to_string(d) + "]";
  }
};

/// Product of two basis symbols: e_{p,t} e_{r,s} = q^(ps-rt) e_{p+r,t+s}.
/// The exponent is the determinant of (p t; r s).
inline std::pair<CycNum, BasisIndex> basis_mul(const CycParams& params,
                                               BasisIndex x, BasisIndex y) {
  const long long n = params.n();
  const long long e = detail::mod_floor(
      detail::mod_floor(x.r, n) * detail::mod_floor(y.s, n) -
          detail::mod_floor(y.r, n) * detail::mod_floor(x.s, n),
      n);
  return {CycNum::q_power(params, e), BasisIndex{x.r + y.r, x.s + y.s}};
}

/// Finite Z[zeta]-linear combination of basis symbols; zero coefficients
/// are never stored, so equality is map identity.
class TorusElement {
 public:
  explicit TorusElement(CycParams params) : params_(params) {}

  static TorusElement basis(CycParams params, BasisIndex e) {
    TorusElement x(params);
    x.terms_.emplace(e, CycNum(params, 1));
    return x;
  }

  static TorusElement one(CycParams params) { return basis(params, {0, 0}); }

  const CycParams& params() const { return params_; }
  const std::map<BasisIndex, CycNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TorusElement& add_term(BasisIndex e, const CycNum& coeff) {
    if (coeff.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
  }

  TorusElement& operator+=(const TorusElement& o) {
    check_params(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  TorusElement operator-() const {
    TorusElement r(params_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
  friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a += -b; }

  friend TorusElement operator*(const TorusElement& x, const TorusElement& y) {
    x.check_params(y);
    TorusElement r(x.params_);
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        auto [coeff, idx] = basis_mul(x.params_, ex, ey);
        r.add_term(idx, cx * cy * coeff);
      }
    }
    return r;
  }

  friend TorusElement operator*(const CycNum& s, TorusElement x) {
    TorusElement r(x.params_);
    for (const auto& [e, c] : x.terms_) r.add_term(e, s * c);
    return r;
  }

  friend bool operator==(const TorusElement&, const TorusElement&) = default;

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += coeff_string(c) + " * e[" + std::to_string(e.r) + "," +
             std::to_string(e.s) + "]";
    }
    return out;
  }

 private:
  // Single powers of q print as "q^e"; anything else parenthesized.
  std::string coeff_string(const CycNum& c) const {
    for (long long e = 0; e < params_.n(); ++e) {
      if (c == CycNum::q_power(params_, e)) return "q^" + std::to_string(e);
    }
    return "(" + c.to_string() + ")";
  }

  void check_params(const TorusElement& o) const {
    if (!(params_ == o.params_)) {
      throw std::invalid_argument("TorusElement: mismatched parameters");
    }
  }

  CycParams params_;
  std::map<BasisIndex, CycNum> terms_;
};

/// e_{p,t} -> e_{ap+bt, cp+dt} on every term; coefficients unchanged.
inline TorusElement sl2_act(const SL2Matrix& B, const TorusElement& x) {
  TorusElement r(x.params());
  for (const auto& [e, c] : x.terms()) r.add_term(B.apply(e), c);
  return r;
}

/// Center membership: x commutes with the generators e_{1,0} and e_{0,1}
/// exactly when every stored index is divisible by n in both coordinates.
inline bool is_central(const TorusElement& x) {
  const long long n = x.params().n();
  for (const auto& [e, c] : x.terms()) {
    if (e.r % n != 0 || e.s % n != 0) return false;
  }
  return true;
}

/// Split of a basis symbol against the rank-n^2 free-module basis:
/// e_{r,s} = coeff * e_{central} * e_{residual} with residual in
/// [0,n) x [0,n) and central on the n Z x n Z sublattice.
struct CentralSplit {
  BasisIndex central;
  BasisIndex residual;
  CycNum coeff;
};

inline CentralSplit central_decomposition(const CycParams& params, BasisIndex e) {
  const long long n = params.n();
  const long long i = detail::mod_floor(e.r, n);
  const long long j = detail::mod_floor(e.s, n);
  const long long p = (e.r - i) / n;
  const long long t = (e.s - j) / n;
  // The recombination scalar q^-(pn*j - tn*i) is 1 here: the exponent is a
  // multiple of n and q has order n.
  return {BasisIndex{p * n, t * n}, BasisIndex{i, j}, CycNum(params, 1)};
}

}  // namespace qtorus
