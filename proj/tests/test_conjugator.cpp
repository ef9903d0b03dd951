#include "qtorus/conjugator.hpp"

#include <vector>

#include "gtest/gtest.h"

#include "qtorus/sl2_words.hpp"

namespace qtorus {
namespace {

TEST(KB, KnownValues) {
  const CycParams p3(3);
  EXPECT_EQ(k_b(SL2Matrix::S(), p3), 1);  // -(2*0*1 + 1*2) = -2 = 1 mod 3
  for (int n : {3, 5, 7}) {
    EXPECT_EQ(k_b(SL2Matrix::T(), CycParams(n)), 0);
  }
  EXPECT_EQ(k_b(SL2Matrix(1, 3, 0, 1), p3), std::nullopt);
  EXPECT_EQ(k_b(SL2Matrix(1, 0, 1, 1), p3), std::nullopt);
}

TEST(ConjDirect, DFTPatternForS) {
  const CycParams p3(3);
  const PowMatrix c = conj_direct(SL2Matrix::S(), p3);
  const std::vector<std::vector<long long>> expected{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}};
  EXPECT_EQ(c.exps(), expected);
}

TEST(ConjDirect, TranslationPatternForT) {
  for (int n : {3, 5}) {
    const CycParams params(n);
    const PowMatrix c = conj_direct(SL2Matrix::T(), params);
    for (long long i = 0; i < n; ++i) {
      for (long long j = 0; j < n; ++j) {
        EXPECT_EQ(c.exp_at(i, j), detail::mod_floor(-(i - j) * (i - j), n));
      }
      EXPECT_EQ(c.exp_at(i, i), 0);  // diagonal of ones
    }
  }
}

TEST(ConjDirect, RequiresUnitUpperRightEntry) {
  EXPECT_THROW(conj_direct(SL2Matrix(1, 3, 0, 1), CycParams(3)),
               std::invalid_argument);
  EXPECT_NO_THROW(conj_direct(SL2Matrix(1, 3, 0, 1), CycParams(5)));
}

TEST(VerifyConjugation, IdentityHoldsBothWays) {
  const CycParams p3(3);
  const ConjugationCheck check = verify_conjugation(
      CycMatrix::identity(p3), SL2Matrix::identity(), RepParams(p3));
  EXPECT_TRUE(check.ok);
  EXPECT_EQ(check.orientation, Orientation::both);
}

TEST(VerifyConjugation, TheoremMatrixHoldsLeftOnly) {
  const CycParams p3(3);
  const CycMatrix c = conj_direct(SL2Matrix::S(), p3).to_cyc();
  const ConjugationCheck check = verify_conjugation(c, SL2Matrix::S(), RepParams(p3));
  EXPECT_TRUE(check.ok);
  EXPECT_EQ(check.orientation, Orientation::left);
}

TEST(VerifyConjugation, WrongMatrixFails) {
  const CycParams p3(3);
  const ConjugationCheck check = verify_conjugation(
      CycMatrix::identity(p3), SL2Matrix::S(), RepParams(p3));
  EXPECT_FALSE(check.ok);
  EXPECT_EQ(check.orientation, Orientation::none);
}

TEST(ConjAny, DirectBranchMatchesConjDirect) {
  const CycParams p5(5);
  const SL2Matrix B = SL2Matrix::S() * SL2Matrix::T();
  const ConjResult res = conj_any(B, p5);
  EXPECT_EQ(res.path.kind, PathKind::direct);
  ASSERT_TRUE(res.C_pow.has_value());
  EXPECT_EQ(*res.C_pow, conj_direct(B, p5));
  EXPECT_EQ(res.C, conj_direct(B, p5).to_cyc());
  EXPECT_EQ(res.nu, CycNum(p5, 5));
  EXPECT_FALSE(res.path.factors.has_value());
}

TEST(ConjAny, ComposedBranchConjugatesCorrectly) {
  const CycParams p3(3);
  for (const SL2Matrix& B : {SL2Matrix(1, 3, 0, 1), SL2Matrix(1, 0, 1, 1),
                             SL2Matrix(2, 3, 1, 2), SL2Matrix(-1, 0, 0, -1),
                             SL2Matrix::identity()}) {
    const ConjResult res = conj_any(B, p3);
    EXPECT_EQ(res.path.kind, PathKind::composed);
    EXPECT_FALSE(res.C_pow.has_value());
    ASSERT_TRUE(res.path.factors.has_value());
    EXPECT_EQ(res.path.factors->first, B * SL2Matrix::T());
    EXPECT_EQ(res.path.factors->second, SL2Matrix::T());
    EXPECT_EQ(res.nu, CycNum(p3, 9));

    const ConjugationCheck check = verify_conjugation(res.C, B, RepParams(p3));
    EXPECT_TRUE(check.ok) << B.to_string();
    EXPECT_TRUE(check.orientation == Orientation::left ||
                check.orientation == Orientation::both);

    const auto nu = cc_star_scalar(res.C);
    ASSERT_TRUE(nu.has_value());
    EXPECT_EQ(*nu, CycNum(p3, 9));
  }
}

TEST(CCStarScalar, KnownScalars) {
  const CycParams p3(3);
  const auto nu_s = cc_star_scalar(conj_direct(SL2Matrix::S(), p3).to_cyc());
  ASSERT_TRUE(nu_s.has_value());
  EXPECT_EQ(*nu_s, CycNum(p3, 3));

  const auto nu_eye = cc_star_scalar(CycMatrix::identity(p3));
  ASSERT_TRUE(nu_eye.has_value());
  EXPECT_EQ(*nu_eye, CycNum(p3, 1));

  // E_{0,0} E_{0,0}* = E_{0,0} is not scalar.
  EXPECT_EQ(cc_star_scalar(CycMatrix::matrix_unit(p3, {0, 0})), std::nullopt);
}

TEST(CCStarScalar, DirectPathScalesByN) {
  for (int n : {3, 5, 7, 11}) {
    const CycParams params(n);
    Sl2WordGen words(0x51u + static_cast<unsigned>(n), 12);
    for (int t = 0; t < 10; ++t) {
      const SL2Matrix B = words.next_direct(n);
      const auto nu = cc_star_scalar(conj_direct(B, params).to_cyc());
      ASSERT_TRUE(nu.has_value()) << B.to_string();
      EXPECT_EQ(*nu, CycNum(params, n)) << B.to_string();
    }
  }
}

TEST(Cocycle, PowersOfT) {
  const CycParams p3(3);
  const auto res = cocycle_scalar(SL2Matrix::T(), SL2Matrix::T(), p3);
  ASSERT_TRUE(res.has_value());
  EXPECT_TRUE(res->modulus_ok);
  EXPECT_EQ(res->expected_modulus, 3);
  EXPECT_EQ(res->lambda * res->lambda.conj(), CycNum(p3, 3));
}

TEST(Cocycle, InversePairLandsOnComposedPath) {
  const CycParams p3(3);
  const auto res = cocycle_scalar(SL2Matrix::S(), SL2Matrix::S().inverse(), p3);
  ASSERT_TRUE(res.has_value());
  EXPECT_EQ(res->path1.kind, PathKind::direct);
  EXPECT_EQ(res->path2.kind, PathKind::direct);
  EXPECT_EQ(res->path12.kind, PathKind::composed);  // product is the identity
  EXPECT_EQ(res->expected_modulus, 1);  // n * n / n^2
  EXPECT_TRUE(res->modulus_ok);
}

TEST(Cocycle, STPairHasModulusN) {
  const CycParams p3(3);
  const auto res = cocycle_scalar(SL2Matrix::S(), SL2Matrix::T(), p3);
  ASSERT_TRUE(res.has_value());
  EXPECT_TRUE(res->modulus_ok);
  EXPECT_EQ(res->lambda * res->lambda.conj(), CycNum(p3, 3));
}

TEST(Analyze, WorkedExampleSAtN3) {
  const CycParams p3(3);
  const ConjugationReport r = analyze(SL2Matrix::S(), p3);

  EXPECT_EQ(r.path.kind, PathKind::direct);
  EXPECT_EQ(r.K_B, 1);
  EXPECT_EQ(r.legendre_K, LegendreClass::plus_one);

  EXPECT_EQ(r.trace_exact, CycNum::from_coeffs(p3, {Integer(1), Integer(2)}));
  ASSERT_TRUE(r.trace_identity_ok.has_value());
  EXPECT_TRUE(*r.trace_identity_ok);
  EXPECT_NEAR(r.trace_numeric.real(), 0.0, 1e-9);
  EXPECT_NEAR(r.trace_numeric.imag(), std::sqrt(3.0), 1e-9);
  ASSERT_TRUE(r.trace_closed_form_ok.has_value());
  EXPECT_TRUE(*r.trace_closed_form_ok);

  EXPECT_EQ(r.det_exact, CycNum::from_coeffs(p3, {Integer(-3), Integer(-6)}));
  ASSERT_TRUE(r.det_modulus_ok.has_value());
  EXPECT_TRUE(*r.det_modulus_ok);
  EXPECT_NEAR(r.det_phase_numeric.real(), 0.0, 1e-9);
  EXPECT_NEAR(r.det_phase_numeric.imag(), -1.0, 1e-9);  // phase -i, not +-1

  EXPECT_TRUE(r.conjugation_ok);
  EXPECT_EQ(r.orientation, Orientation::left);
  EXPECT_TRUE(r.cc_star_ok);
  EXPECT_EQ(r.nu, CycNum(p3, 3));
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Analyze, DegenerateTraceBranchAtT) {
  const CycParams p3(3);
  const ConjugationReport r = analyze(SL2Matrix::T(), p3);
  EXPECT_EQ(r.K_B, 0);
  EXPECT_EQ(r.legendre_K, LegendreClass::zero_class);
  EXPECT_EQ(r.trace_exact, CycNum(p3, 3));
  ASSERT_TRUE(r.trace_identity_ok.has_value());
  EXPECT_TRUE(*r.trace_identity_ok);
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Analyze, ComposedPathReport) {
  const CycParams p3(3);
  const ConjugationReport r = analyze(SL2Matrix(1, 0, 1, 1), p3);
  EXPECT_EQ(r.path.kind, PathKind::composed);
  EXPECT_EQ(r.K_B, std::nullopt);
  EXPECT_EQ(r.legendre_K, std::nullopt);
  EXPECT_EQ(r.trace_identity_ok, std::nullopt);
  EXPECT_EQ(r.trace_closed_form_ok, std::nullopt);
  EXPECT_EQ(r.det_modulus_ok, std::nullopt);
  EXPECT_TRUE(r.conjugation_ok);
  EXPECT_TRUE(r.cc_star_ok);
  EXPECT_EQ(r.nu, CycNum(p3, 9));
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Analyze, GaloisTwistedRootStillExact) {
  // q = z^2 at n = 5: exact identities are root-independent; only the
  // closed-form numeric comparison is pinned to q_exp = 1.
  const CycParams params(5, 2);
  const ConjugationReport r = analyze(SL2Matrix::S(), params);
  EXPECT_TRUE(r.conjugation_ok);
  ASSERT_TRUE(r.trace_identity_ok.has_value());
  EXPECT_TRUE(*r.trace_identity_ok);
  EXPECT_EQ(r.trace_closed_form_ok, std::nullopt);  // not claimed off q_exp = 1
  EXPECT_TRUE(r.all_checks_pass());
}

TEST(Orientation, GloballyConsistentAcrossSuite) {
  for (int n : {3, 5}) {
    const CycParams params(n);
    const RepParams canonical(params);
    Sl2WordGen words(0xa111u + static_cast<unsigned>(n), 12);
    bool left_all = true;
    std::vector<SL2Matrix> suite{SL2Matrix::S(), SL2Matrix::T(),
                                 SL2Matrix::S() * SL2Matrix::T(),
                                 SL2Matrix::T() * SL2Matrix::S()};
    for (int t = 0; t < 8; ++t) suite.push_back(words.next());
    for (const SL2Matrix& B : suite) {
      const ConjugationCheck check =
          verify_conjugation(conj_any(B, params).C, B, canonical);
      EXPECT_TRUE(check.ok) << B.to_string();
      left_all = left_all && (check.orientation == Orientation::left ||
                              check.orientation == Orientation::both);
    }
    EXPECT_TRUE(left_all);
  }
}

}  // namespace
}  // namespace qtorus
