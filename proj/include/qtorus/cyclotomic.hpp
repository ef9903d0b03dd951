#pragma once

// Exact arithmetic in Z[zeta], zeta a primitive n-th root of unity for an
// odd prime n. Elements are stored on the integral basis {1, zeta, ...,
// zeta^(n-2)}; zeta^(n-1) is always eliminated through
// 1 + zeta + ... + zeta^(n-1) = 0, so equality is coefficient identity.
//
// The working root q = zeta^k is configurable (k coprime to n) so that
// Galois-conjugate runs of the same computation stay exact.

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qtorus {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when a division that the calling algorithm guarantees to be exact
/// turns out not to be. Always indicates a defect, never a math result.
class ExactDivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

constexpr bool is_odd_prime(long long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long long d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

// Least non-negative residue.
constexpr long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace detail

class CycParams {
 public:
  explicit CycParams(int n, int q_exp = 1) : n_(n) {
    if (!detail::is_odd_prime(n)) {
      throw std::invalid_argument("CycParams: n must be an odd prime >= 3");
    }
    q_exp_ = static_cast<int>(detail::mod_floor(q_exp, n));
    if (q_exp_ == 0) {
      throw std::invalid_argument("CycParams: q_exp must be nonzero mod n");
    }
  }

  int n() const { return n_; }
  int q_exp() const { return q_exp_; }

  friend bool operator==(const CycParams&, const CycParams&) = default;

 private:
  int n_;
  int q_exp_;
};

namespace detail {

// Folds a length-n power accumulator (coefficients of zeta^0..zeta^(n-1))
// into the canonical length-(n-1) basis by eliminating zeta^(n-1).
template <typename T>
std::vector<T> fold_top_power(const std::vector<T>& acc) {
  const std::size_t n = acc.size();
  std::vector<T> out(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out[i] = acc[i] - acc[n - 1];
  }
  return out;
}

// Product of two canonical coefficient vectors, reduced mod Phi_n.
template <typename T>
std::vector<T> mul_canonical(const std::vector<T>& a, const std::vector<T>& b,
                             std::size_t n) {
  std::vector<T> acc(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      acc[(i + j) % n] += a[i] * b[j];
    }
  }
  return fold_top_power(acc);
}

}  // namespace detail

class CycNum {
 public:
  explicit CycNum(CycParams params)
      : params_(params), coeffs_(static_cast<std::size_t>(params.n() - 1)) {}

  CycNum(CycParams params, Integer constant) : CycNum(params) {
    coeffs_[0] = std::move(constant);
  }

  /// Canonical form of q^e = zeta^(q_exp * e mod n), for any integer e.
  static CycNum q_power(CycParams params, long long e) {
    return zeta_power(params,
                      detail::mod_floor(params.q_exp() * detail::mod_floor(e, params.n()),
                                        params.n()));
  }

  /// Canonical form of zeta^e.
  static CycNum zeta_power(CycParams params, long long e) {
    CycNum r(params);
    const long long n = params.n();
    const long long em = detail::mod_floor(e, n);
    if (em == n - 1) {
      for (auto& c : r.coeffs_) c = -1;  // zeta^(n-1) = -(1 + ... + zeta^(n-2))
    } else {
      r.coeffs_[static_cast<std::size_t>(em)] = 1;
    }
    return r;
  }

  static CycNum from_coeffs(CycParams params, std::vector<Integer> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(params.n() - 1)) {
      throw std::invalid_argument("CycNum: coefficient vector must have length n-1");
    }
    CycNum r(params);
    r.coeffs_ = std::move(coeffs);
    return r;
  }

  const CycParams& params() const { return params_; }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// The value as a rational integer, if it is one.
  std::optional<Integer> as_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) return std::nullopt;
    }
    return coeffs_[0];
  }

  /// Image under the Galois automorphism zeta -> zeta^t, gcd(t, n) = 1.
  CycNum galois(long long t) const {
    const long long n = params_.n();
    const long long tm = detail::mod_floor(t, n);
    if (tm == 0) throw std::invalid_argument("CycNum::galois: t must be coprime to n");
    std::vector<Integer> acc(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      acc[static_cast<std::size_t>((static_cast<long long>(i) * tm) % n)] += coeffs_[i];
    }
    CycNum r(params_);
    r.coeffs_ = detail::fold_top_power(acc);
    return r;
  }

  /// Complex conjugation zeta -> zeta^(-1).
  CycNum conj() const { return galois(params_.n() - 1); }

  /// Numeric value at zeta = exp(2*pi*i/n). For cross-checks and display
  /// only; exact decisions never go through this.
  std::complex<double> embed() const {
    const double n = static_cast<double>(params_.n());
    std::complex<double> v{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
      v += coeffs_[i].convert_to<double>() *
           std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    return v;
  }

  CycNum& operator+=(const CycNum& o) {
    check_params(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }

  CycNum& operator-=(const CycNum& o) {
    check_params(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }

  CycNum& operator*=(const CycNum& o) {
    check_params(o);
    coeffs_ = detail::mul_canonical(coeffs_, o.coeffs_,
                                    static_cast<std::size_t>(params_.n()));
    return *this;
  }

  CycNum operator-() const {
    CycNum r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  friend CycNum operator*(const Integer& s, CycNum a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  friend bool operator==(const CycNum&, const CycNum&) = default;

  /// "c0 + c1*z + c2*z^2 + ..." with zero terms dropped.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      if (out.empty()) {
        out += c < 0 ? "-" : "";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const Integer a = abs(c);
      if (i == 0) {
        out += a.str();
      } else {
        if (a != 1) {
          out += a.str();
          out += "*";
        }
        out += i == 1 ? "z" : "z^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_params(const CycNum& o) const {
    if (!(params_ == o.params_)) {
      throw std::invalid_argument("CycNum: mismatched ring parameters");
    }
  }

  CycParams params_;
  std::vector<Integer> coeffs_;
};

namespace detail {

using Poly = std::vector<Rational>;  // dense, index = degree

inline void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

// Euclidean division in Q[x]; returns the remainder, quotient discarded.
inline Poly poly_rem(Poly a, const Poly& b) {
  poly_trim(a);
  while (poly_deg(a) >= poly_deg(b)) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= f * b[i];
    }
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

inline Poly poly_quot(Poly a, const Poly& b) {
  poly_trim(a);
  if (poly_deg(a) < poly_deg(b)) return {};
  Poly q(a.size() - b.size() + 1);
  while (poly_deg(a) >= poly_deg(b)) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] -= f * b[i];
    }
    a.pop_back();
    poly_trim(a);
  }
  return q;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      p[i + j] += a[i] * b[j];
    }
  }
  return p;
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

// Inverse of y modulo Phi_n = 1 + x + ... + x^(n-1), via extended Euclid
// over Q[x]. Phi_n is irreducible for prime n, so any nonzero y of degree
// < n-1 is invertible.
inline Poly inverse_mod_phi(const Poly& y, std::size_t n) {
  Poly phi(n, Rational(1));
  Poly r0 = phi, r1 = y;
  poly_trim(r1);
  Poly t0, t1{Rational(1)};
  while (poly_deg(r1) > 0) {
    Poly q = poly_quot(r0, r1);
    Poly r2 = poly_sub(r0, poly_mul(q, r1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    Poly t2 = poly_sub(t0, poly_mul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r1 is now a nonzero constant (the gcd); t1 * y == r1 (mod phi).
  const Rational g = r1.at(0);
  Poly inv = poly_rem(std::move(t1), phi);
  for (auto& c : inv) c /= g;
  return inv;
}

}  // namespace detail

/// Quotient x/y in Z[zeta] if it exists there; nullopt otherwise.
inline std::optional<CycNum> try_exact_div(const CycNum& x, const CycNum& y) {
  if (!(x.params() == y.params())) {
    throw std::invalid_argument("try_exact_div: mismatched ring parameters");
  }
  if (y.is_zero()) {
    throw std::invalid_argument("try_exact_div: division by zero");
  }
  if (x.is_zero()) return CycNum(x.params());

  const std::size_t n = static_cast<std::size_t>(x.params().n());
  detail::Poly ypoly(y.coeffs().size());
  for (std::size_t i = 0; i < ypoly.size(); ++i) ypoly[i] = Rational(y.coeffs()[i]);
  const detail::Poly inv = detail::inverse_mod_phi(ypoly, n);

  detail::Poly xpoly(x.coeffs().size());
  for (std::size_t i = 0; i < xpoly.size(); ++i) xpoly[i] = Rational(x.coeffs()[i]);

  detail::Poly prod = detail::poly_mul(xpoly, inv);
  std::vector<Rational> acc(n);
  for (std::size_t e = 0; e < prod.size(); ++e) acc[e % n] += prod[e];
  const std::vector<Rational> folded = detail::fold_top_power(acc);

  std::vector<Integer> zc(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (denominator(folded[i]) != 1) return std::nullopt;
    zc[i] = numerator(folded[i]);
  }
  return CycNum::from_coeffs(x.params(), std::move(zc));
}

/// Exact quotient; throws ExactDivisionError when x/y leaves Z[zeta].
/// Divisions on the fraction-free elimination path must never throw.
inline CycNum exact_div(const CycNum& x, const CycNum& y) {
  auto q = try_exact_div(x, y);
  if (!q) throw ExactDivisionError("exact_div: quotient is not in Z[zeta]");
  return *q;
}

}  // namespace qtorus
