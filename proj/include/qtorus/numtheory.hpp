#pragma once

// Modular arithmetic over an odd prime, Legendre symbols and quadratic
// Gauss sums. The Legendre symbol ships with two independent routes:
// Euler's criterion (production) and a brute-force square search (oracle),
// so the test surface can cross-validate them.

#include <complex>
#include <cmath>
#include <stdexcept>

#include "qtorus/cyclotomic.hpp"

namespace qtorus {

/// Residue class of a Legendre-symbol argument: quadratic residue,
/// non-residue, or the degenerate a = 0 class (no symbol defined).
enum class LegendreClass { plus_one, minus_one, zero_class };

inline long long mod_pow(long long base, long long exp, long long mod) {
  long long b = detail::mod_floor(base, mod);
  long long r = 1;
  while (exp > 0) {
    if (exp & 1) r = r * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return r;
}

/// Multiplicative inverse of a mod n, in [1, n-1]. n must be an odd prime.
inline long long mod_inverse(long long a, long long n) {
  const long long am = detail::mod_floor(a, n);
  if (am == 0) throw std::invalid_argument("mod_inverse: a is divisible by n");
  return mod_pow(am, n - 2, n);
}

/// Legendre symbol (a/n) by Euler's criterion: a^((n-1)/2) mod n.
inline int legendre(long long a, long long n) {
  const long long am = detail::mod_floor(a, n);
  if (am == 0) throw std::invalid_argument("legendre: a is divisible by n");
  return mod_pow(am, (n - 1) / 2, n) == 1 ? 1 : -1;
}

/// Independent Legendre oracle: searches x in [1, n-1] with x^2 = a mod n.
inline int legendre_oracle(long long a, long long n) {
  const long long am = detail::mod_floor(a, n);
  if (am == 0) throw std::invalid_argument("legendre_oracle: a is divisible by n");
  for (long long x = 1; x < n; ++x) {
    if (x * x % n == am) return 1;
  }
  return -1;
}

/// The quadratic Gauss sum sum_{x=0}^{n-1} q^(a*x^2), exact in Z[zeta].
/// a = 0 mod n is allowed and gives the integer n.
inline CycNum gauss_sum_exact(const CycParams& params, long long a) {
  const long long n = params.n();
  const long long am = detail::mod_floor(a, n);
  CycNum sum(params);
  for (long long x = 0; x < n; ++x) {
    sum += CycNum::q_power(params, am * (x * x % n) % n);
  }
  return sum;
}

/// Closed-form value (1 + i^-n)/(1 + i^-1) * sqrt(n) of the Gauss sum at
/// the root exp(2*pi*i/n): sqrt(n) when n = 1 mod 4, i*sqrt(n) when
/// n = 3 mod 4. i^-n is evaluated exactly from n mod 4.
inline std::complex<double> gauss_closed_numeric(long long n) {
  const std::complex<double> i_inv{0.0, -1.0};
  const std::complex<double> i_pow_minus_n =
      (n % 4 == 1) ? std::complex<double>{0.0, -1.0} : std::complex<double>{0.0, 1.0};
  return (1.0 + i_pow_minus_n) / (1.0 + i_inv) * std::sqrt(static_cast<double>(n));
}

}  // namespace qtorus
