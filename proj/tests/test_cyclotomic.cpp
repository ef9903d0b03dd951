#include "qtorus/cyclotomic.hpp"

#include <complex>
#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace qtorus {
namespace {

std::vector<Integer> ints(std::initializer_list<long long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

CycNum random_cyc(std::mt19937_64& rng, const CycParams& params, long long bound) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(params.n() - 1));
  for (auto& c : coeffs) {
    c = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
  }
  return CycNum::from_coeffs(params, std::move(coeffs));
}

TEST(CycParams, ValidatesOddPrime) {
  EXPECT_NO_THROW(CycParams(3));
  EXPECT_NO_THROW(CycParams(13, 5));
  EXPECT_THROW(CycParams(1), std::invalid_argument);
  EXPECT_THROW(CycParams(2), std::invalid_argument);
  EXPECT_THROW(CycParams(4), std::invalid_argument);
  EXPECT_THROW(CycParams(9), std::invalid_argument);
  EXPECT_THROW(CycParams(15), std::invalid_argument);
}

TEST(CycParams, ValidatesPrimitiveRoot) {
  EXPECT_THROW(CycParams(5, 0), std::invalid_argument);
  EXPECT_THROW(CycParams(5, 5), std::invalid_argument);
  EXPECT_EQ(CycParams(5, 7).q_exp(), 2);   // reduced mod n
  EXPECT_EQ(CycParams(5, -1).q_exp(), 4);
}

TEST(CycNum, QPowerCanonicalForms) {
  const CycParams p3(3);
  EXPECT_EQ(CycNum::q_power(p3, 0).coeffs(), ints({1, 0}));
  EXPECT_EQ(CycNum::q_power(p3, 2).coeffs(), ints({-1, -1}));  // z^2 = -1 - z
  const CycParams p5(5);
  EXPECT_EQ(CycNum::q_power(p5, 7).coeffs(), ints({0, 0, 1, 0}));  // 7 mod 5 = 2
  // q = z^k twists the exponent.
  const CycParams p5k2(5, 2);
  EXPECT_EQ(CycNum::q_power(p5k2, 1), CycNum::zeta_power(p5k2, 2));
}

TEST(CycNum, RingOperationExamples) {
  const CycParams p3(3);
  const CycNum z = CycNum::zeta_power(p3, 1);
  const CycNum z2 = CycNum::zeta_power(p3, 2);
  EXPECT_EQ(z * z2, CycNum(p3, 1));
  EXPECT_EQ(CycNum::q_power(p3, 0) + CycNum::q_power(p3, 1) + CycNum::q_power(p3, 2),
            CycNum(p3));

  const CycParams p5(5);
  const CycNum one(p5, 1);
  const CycNum zeta = CycNum::zeta_power(p5, 1);
  EXPECT_EQ((one + zeta) * (one - zeta), CycNum::from_coeffs(p5, ints({1, 0, -1, 0})));
}

TEST(CycNum, ParamsMismatchThrows) {
  const CycNum a(CycParams(3), 1);
  const CycNum b(CycParams(5), 1);
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(a * b, std::invalid_argument);
  const CycNum c(CycParams(3, 2), 1);  // same n, different root
  EXPECT_THROW(a + c, std::invalid_argument);
}

TEST(CycNum, FromCoeffsValidatesLength) {
  EXPECT_THROW(CycNum::from_coeffs(CycParams(3), ints({1, 2, 3})),
               std::invalid_argument);
}

TEST(CycNum, Conjugation) {
  const CycParams p3(3);
  EXPECT_EQ(CycNum::zeta_power(p3, 1).conj().coeffs(), ints({-1, -1}));
  EXPECT_EQ(CycNum(p3, 42).conj(), CycNum(p3, 42));
  const CycNum x = CycNum::from_coeffs(p3, ints({1, 2}));  // 1 + 2z
  EXPECT_EQ(x.conj().coeffs(), ints({-1, -2}));            // 1 + 2z^2
}

TEST(CycNum, ConjugationIsInvolutiveHomomorphism) {
  std::mt19937_64 rng(11);
  for (int n : {3, 5, 7, 11}) {
    const CycParams params(n);
    for (int t = 0; t < 25; ++t) {
      const CycNum x = random_cyc(rng, params, 30);
      const CycNum y = random_cyc(rng, params, 30);
      EXPECT_EQ(x.conj().conj(), x);
      EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
      EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    }
    for (long long e = 0; e < n; ++e) {
      EXPECT_EQ(CycNum::q_power(params, e).conj(),
                CycNum::q_power(params, (n - e) % n));
    }
  }
}

TEST(CycNum, GaloisMapsCompose) {
  const CycParams p7(7);
  std::mt19937_64 rng(5);
  const CycNum x = random_cyc(rng, p7, 10);
  for (long long t = 1; t < 7; ++t) {
    for (long long u = 1; u < 7; ++u) {
      EXPECT_EQ(x.galois(t).galois(u), x.galois(t * u % 7));
    }
  }
  EXPECT_EQ(x.galois(6), x.conj());
  EXPECT_THROW(x.galois(7), std::invalid_argument);
}

TEST(CycNum, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(23);
  for (int n : {3, 5, 7, 13}) {
    const CycParams params(n);
    for (int t = 0; t < 25; ++t) {
      const CycNum x = random_cyc(rng, params, 40);
      const CycNum y = random_cyc(rng, params, 40);
      const CycNum z = random_cyc(rng, params, 40);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x + CycNum(params), x);
      EXPECT_EQ(x * CycNum(params, 1), x);
      EXPECT_EQ(x + (-x), CycNum(params));
    }
  }
}

TEST(CycNum, PowerInverses) {
  for (int n : {3, 5, 7, 11, 13}) {
    for (int k = 1; k < n; ++k) {
      const CycParams params(n, k);
      for (long long e = 0; e < n; ++e) {
        EXPECT_EQ(CycNum::q_power(params, e) * CycNum::q_power(params, (n - e) % n),
                  CycNum(params, 1));
      }
    }
  }
}

TEST(ExactDiv, MonomialAndZeroCases) {
  const CycParams p5(5);
  EXPECT_EQ(exact_div(CycNum::q_power(p5, 3), CycNum::q_power(p5, 1)),
            CycNum::q_power(p5, 2));
  EXPECT_EQ(exact_div(CycNum(p5), CycNum::from_coeffs(p5, ints({3, -1, 0, 2}))),
            CycNum(p5));
}

TEST(ExactDiv, WorkedQuotient) {
  // (1 + 2z)(1 + 2z^2) = 3 in Z[zeta_3], so 3 / (1 + 2z) = 1 + 2z^2.
  const CycParams p3(3);
  const CycNum y = CycNum::from_coeffs(p3, ints({1, 2}));
  const CycNum q = exact_div(CycNum(p3, 3), y);
  EXPECT_EQ(q, y.conj());
  EXPECT_EQ(q.coeffs(), ints({-1, -2}));
  EXPECT_EQ(y * q, CycNum(p3, 3));
}

TEST(ExactDiv, ErrorsAndNonExactQuotients) {
  const CycParams p3(3);
  EXPECT_THROW(exact_div(CycNum(p3, 1), CycNum(p3)), std::invalid_argument);
  EXPECT_EQ(try_exact_div(CycNum(p3, 1), CycNum(p3, 2)), std::nullopt);
  EXPECT_THROW(exact_div(CycNum(p3, 1), CycNum(p3, 2)), ExactDivisionError);
}

TEST(ExactDiv, RoundTripOnRandomProducts) {
  std::mt19937_64 rng(31);
  for (int n : {3, 5, 7, 11}) {
    const CycParams params(n);
    for (int t = 0; t < 25; ++t) {
      const CycNum x = random_cyc(rng, params, 50);
      CycNum y = random_cyc(rng, params, 50);
      if (y.is_zero()) y = CycNum(params, 1);
      EXPECT_EQ(exact_div(x * y, y), x);
    }
  }
}

TEST(Embed, KnownValues) {
  const CycParams p3(3);
  const std::complex<double> v = CycNum::from_coeffs(p3, ints({1, 2})).embed();
  EXPECT_NEAR(v.real(), 0.0, 1e-12);
  EXPECT_NEAR(v.imag(), std::sqrt(3.0), 1e-12);

  EXPECT_EQ(CycNum(p3).embed(), std::complex<double>(0.0, 0.0));

  const CycParams p5(5);
  const CycNum partial = CycNum(p5, 1) + CycNum::zeta_power(p5, 1) +
                         CycNum::zeta_power(p5, 2) + CycNum::zeta_power(p5, 3);
  EXPECT_NEAR(std::abs(partial.embed()), 1.0, 1e-12);  // equals -zeta^4
}

TEST(Embed, RingHomomorphismNumerically) {
  std::mt19937_64 rng(41);
  for (int n : {3, 7, 13}) {
    const CycParams params(n);
    for (int t = 0; t < 25; ++t) {
      // At small coefficients the homomorphism defect stays below 1e-9
      // absolutely; at the 1e6 scale double rounding forces a relative
      // comparison.
      const CycNum xs = random_cyc(rng, params, 100);
      const CycNum ys = random_cyc(rng, params, 100);
      EXPECT_LT(std::abs((xs * ys).embed() - xs.embed() * ys.embed()), 1e-9);
      EXPECT_LT(std::abs((xs + ys).embed() - (xs.embed() + ys.embed())), 1e-9);

      const CycNum xl = random_cyc(rng, params, 1000000);
      const CycNum yl = random_cyc(rng, params, 1000000);
      const double scale =
          std::max(1.0, std::abs(xl.embed()) * std::abs(yl.embed()));
      EXPECT_LT(std::abs((xl * yl).embed() - xl.embed() * yl.embed()), 1e-9 * scale);
    }
  }
}

TEST(ToString, TextualForm) {
  const CycParams p5(5);
  EXPECT_EQ(CycNum(p5).to_string(), "0");
  EXPECT_EQ(CycNum(p5, 3).to_string(), "3");
  EXPECT_EQ(CycNum::from_coeffs(p5, ints({1, 2, 0, 0})).to_string(), "1 + 2*z");
  EXPECT_EQ(CycNum::from_coeffs(p5, ints({-1, 0, -2, 1})).to_string(),
            "-1 - 2*z^2 + z^3");
  EXPECT_EQ(CycNum::from_coeffs(p5, ints({0, 1, 0, 0})).to_string(), "z");
}

TEST(CycNum, BigCoefficientArithmeticStaysExact) {
  const CycParams p5(5);
  const Integer big = boost::multiprecision::pow(Integer(10), 40);
  const CycNum x = big * CycNum::from_coeffs(p5, ints({1, -2, 3, -4}));
  const CycNum y = big * CycNum::from_coeffs(p5, ints({5, 4, -3, 2}));
  EXPECT_EQ(exact_div(x * y, y), x);
  EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
}

}  // namespace
}  // namespace qtorus
