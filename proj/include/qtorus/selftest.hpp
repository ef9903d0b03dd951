#pragma once

// Built-in invariant suite behind the `selftest` CLI subcommand: one line
// per check, deterministic seeds, n in {3, 5, 7}. Mirrors the library's
// test surface so a deployed binary can vouch for itself.

#include <complex>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "qtorus/conjugator.hpp"
#include "qtorus/cyclotomic.hpp"
#include "qtorus/matrix.hpp"
#include "qtorus/numtheory.hpp"
#include "qtorus/rep.hpp"
#include "qtorus/sl2_words.hpp"
#include "qtorus/torus.hpp"

namespace qtorus::selftest {

namespace detail_st {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline CycNum random_cyc(std::mt19937_64& rng, const CycParams& params,
                         long long coeff_bound = 20) {
  std::vector<Integer> coeffs(static_cast<std::size_t>(params.n() - 1));
  for (auto& c : coeffs) {
    c = static_cast<long long>(draw(rng, 2 * coeff_bound + 1)) - coeff_bound;
  }
  return CycNum::from_coeffs(params, std::move(coeffs));
}

inline PowMatrix random_pow(std::mt19937_64& rng, const CycParams& params) {
  const std::size_t n = static_cast<std::size_t>(params.n());
  std::vector<std::vector<long long>> exps(n, std::vector<long long>(n));
  for (auto& row : exps) {
    for (auto& e : row) e = static_cast<long long>(draw(rng, n));
  }
  return PowMatrix(params, std::move(exps));
}

inline TorusElement random_torus(std::mt19937_64& rng, const CycParams& params) {
  TorusElement x(params);
  const std::size_t terms = 1 + draw(rng, 3);
  for (std::size_t t = 0; t < terms; ++t) {
    const long long r = static_cast<long long>(draw(rng, 13)) - 6;
    const long long s = static_cast<long long>(draw(rng, 13)) - 6;
    x.add_term({r, s}, random_cyc(rng, params, 5));
  }
  return x;
}

// Naive cofactor expansion, the independent determinant route.
inline CycNum det_cofactor_block(const CycParams& params,
                                 const std::vector<std::vector<CycNum>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  CycNum det(params);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<CycNum>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<CycNum> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      sub.push_back(std::move(row));
    }
    CycNum term = m[0][j] * det_cofactor_block(params, sub);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline CycNum det_cofactor(const CycMatrix& a) {
  std::vector<std::vector<CycNum>> rows;
  rows.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::vector<CycNum> row;
    row.reserve(a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  return det_cofactor_block(a.params(), rows);
}

}  // namespace detail_st

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok) {
    out_ << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures_;
  }

  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

inline void run_cyclotomic_suite(Runner& r, int n, std::mt19937_64& rng) {
  const CycParams params(n);
  const std::string tag = " (n=" + std::to_string(n) + ")";

  bool axioms = true;
  for (int t = 0; t < 20; ++t) {
    const CycNum x = detail_st::random_cyc(rng, params);
    const CycNum y = detail_st::random_cyc(rng, params);
    const CycNum z = detail_st::random_cyc(rng, params);
    axioms = axioms && (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
             x * (y + z) == x * y + x * z && x * y == y * x;
  }
  r.check("cyclotomic ring axioms" + tag, axioms);

  bool inverses = true;
  for (long long e = 0; e < n; ++e) {
    inverses = inverses &&
               CycNum::q_power(params, e) * CycNum::q_power(params, (n - e) % n) ==
                   CycNum(params, 1);
  }
  r.check("cyclotomic q-power inverses" + tag, inverses);

  bool conj_ok = true;
  for (int t = 0; t < 20; ++t) {
    const CycNum x = detail_st::random_cyc(rng, params);
    const CycNum y = detail_st::random_cyc(rng, params);
    conj_ok = conj_ok && x.conj().conj() == x &&
              (x * y).conj() == x.conj() * y.conj() &&
              (x + y).conj() == x.conj() + y.conj();
  }
  for (long long e = 0; e < n; ++e) {
    conj_ok = conj_ok && CycNum::q_power(params, e).conj() ==
                             CycNum::q_power(params, (n - e) % n);
  }
  r.check("cyclotomic conjugation involution/homomorphism" + tag, conj_ok);

  bool div_ok = true;
  for (int t = 0; t < 20; ++t) {
    const CycNum x = detail_st::random_cyc(rng, params);
    CycNum y = detail_st::random_cyc(rng, params);
    if (y.is_zero()) y = CycNum(params, 1);
    div_ok = div_ok && exact_div(x * y, y) == x;
  }
  r.check("cyclotomic exact division round-trip" + tag, div_ok);

  bool embed_ok = true;
  for (int t = 0; t < 20; ++t) {
    const CycNum x = detail_st::random_cyc(rng, params, 50);
    const CycNum y = detail_st::random_cyc(rng, params, 50);
    embed_ok = embed_ok &&
               std::abs((x * y).embed() - x.embed() * y.embed()) < 1e-9 &&
               std::abs((x + y).embed() - (x.embed() + y.embed())) < 1e-9;
  }
  r.check("cyclotomic numeric embedding homomorphism" + tag, embed_ok);
}

inline void run_numtheory_suite(Runner& r) {
  bool euler_ok = true;
  for (long long p = 3; p <= 97; p += 2) {
    if (!qtorus::detail::is_odd_prime(p)) continue;
    for (long long a = 1; a < p; ++a) {
      euler_ok = euler_ok && legendre(a, p) == legendre_oracle(a, p);
    }
  }
  r.check("legendre euler criterion vs brute-force oracle (primes <= 97)", euler_ok);

  bool mult_ok = true;
  for (long long p : {3, 5, 7, 11, 13}) {
    for (long long a = 1; a < p; ++a) {
      for (long long b = 1; b < p; ++b) {
        mult_ok = mult_ok && legendre(a * b, p) == legendre(a, p) * legendre(b, p);
      }
    }
  }
  r.check("legendre multiplicativity", mult_ok);

  bool twist_ok = true;
  bool modulus_ok = true;
  for (int n : {3, 5, 7, 11, 13}) {
    for (int k = 1; k < n; ++k) {
      const CycParams params(n, k);
      const CycNum g1 = gauss_sum_exact(params, 1);
      modulus_ok = modulus_ok && g1 * g1.conj() == CycNum(params, n);
      for (long long a = 1; a < n; ++a) {
        twist_ok = twist_ok &&
                   gauss_sum_exact(params, a) == Integer(legendre(a, n)) * g1;
      }
    }
  }
  r.check("gauss sum twisting identity G(a) = (a/n) G(1), n <= 13", twist_ok);
  r.check("gauss sum modulus G(1) conj(G(1)) = n, n <= 13", modulus_ok);

  bool closed_ok = true;
  for (int n : {3, 5, 7, 11, 13}) {
    const CycParams params(n, 1);
    closed_ok = closed_ok &&
                std::abs(gauss_sum_exact(params, 1).embed() -
                         gauss_closed_numeric(n)) < 1e-9;
  }
  r.check("gauss sum closed form numeric, n <= 13", closed_ok);
}

inline void run_matrix_suite(Runner& r, int n, std::mt19937_64& rng) {
  const CycParams params(n);
  const std::string tag = " (n=" + std::to_string(n) + ")";

  if (n <= 5) {
    bool det_mult = true;
    for (int t = 0; t < 4; ++t) {
      const CycMatrix a = detail_st::random_pow(rng, params).to_cyc();
      const CycMatrix b = detail_st::random_pow(rng, params).to_cyc();
      det_mult = det_mult && mat_det(a * b) == mat_det(a) * mat_det(b);
    }
    r.check("matrix det multiplicativity" + tag, det_mult);

    bool det_oracle = true;
    for (int t = 0; t < 4; ++t) {
      const CycMatrix a = detail_st::random_pow(rng, params).to_cyc();
      det_oracle = det_oracle && mat_det(a) == detail_st::det_cofactor(a);
    }
    r.check("matrix det vs cofactor oracle" + tag, det_oracle);
  }

  bool misc = true;
  for (int t = 0; t < 3; ++t) {
    const CycMatrix a = detail_st::random_pow(rng, params).to_cyc();
    const CycMatrix b = detail_st::random_pow(rng, params).to_cyc();
    misc = misc && mat_trace(a * b) == mat_trace(b * a) &&
           ctranspose(ctranspose(a)) == a &&
           mat_det(ctranspose(a)) == mat_det(a).conj();
  }
  const CycMatrix eye = CycMatrix::identity(params);
  misc = misc && mat_det(eye) == CycNum(params, 1) &&
         mat_trace(eye) == CycNum(params, n);
  r.check("matrix trace/ctranspose/determinant identities" + tag, misc);
}

inline void run_torus_suite(Runner& r, int n, std::mt19937_64& rng) {
  const CycParams params(n);
  const std::string tag = " (n=" + std::to_string(n) + ")";
  Sl2WordGen words(0x7051u + static_cast<unsigned>(n), 6);

  bool action_alg = true;
  for (int t = 0; t < 12; ++t) {
    const SL2Matrix B = words.next();
    const TorusElement x = detail_st::random_torus(rng, params);
    const TorusElement y = detail_st::random_torus(rng, params);
    action_alg = action_alg && sl2_act(B, x * y) == sl2_act(B, x) * sl2_act(B, y);
  }
  r.check("torus SL2 action is an algebra map" + tag, action_alg);

  bool action_comp = true;
  for (int t = 0; t < 12; ++t) {
    const SL2Matrix B1 = words.next();
    const SL2Matrix B2 = words.next();
    const TorusElement x = detail_st::random_torus(rng, params);
    action_comp = action_comp && sl2_act(B1 * B2, x) == sl2_act(B1, sl2_act(B2, x));
  }
  r.check("torus SL2 left-action composition" + tag, action_comp);

  bool center_ok = true;
  const TorusElement l = TorusElement::basis(params, {1, 0});
  const TorusElement m = TorusElement::basis(params, {0, 1});
  for (long long rr = 0; rr < 2 * n; ++rr) {
    for (long long ss = 0; ss < 2 * n; ++ss) {
      const TorusElement e = TorusElement::basis(params, {rr, ss});
      const bool central = is_central(e);
      const bool divisible = rr % n == 0 && ss % n == 0;
      const bool commutes = e * l == l * e && e * m == m * e;
      center_ok = center_ok && central == divisible && central == commutes;
    }
  }
  r.check("torus center characterization" + tag, center_ok);

  bool split_ok = true;
  for (int t = 0; t < 10; ++t) {
    const long long rr = static_cast<long long>(detail_st::draw(rng, 41)) - 20;
    const long long ss = static_cast<long long>(detail_st::draw(rng, 41)) - 20;
    const CentralSplit split = central_decomposition(params, {rr, ss});
    const TorusElement recombined =
        split.coeff * (TorusElement::basis(params, split.central) *
                       TorusElement::basis(params, split.residual));
    split_ok = split_ok && recombined == TorusElement::basis(params, {rr, ss}) &&
               is_central(TorusElement::basis(params, split.central)) &&
               0 <= split.residual.r && split.residual.r < n &&
               0 <= split.residual.s && split.residual.s < n;
  }
  r.check("torus central decomposition" + tag, split_ok);
}

inline void run_rep_suite(Runner& r, int n) {
  const CycParams params(n);
  const std::string tag = " (n=" + std::to_string(n) + ")";

  bool relations = true;
  for (int alpha : {0, 1}) {
    for (int rho : {0, 1}) {
      const RepParams rp(params, alpha, rho);
      const auto [L, M] = build_generators(rp);
      CycMatrix ln = CycMatrix::identity(params);
      CycMatrix mn = CycMatrix::identity(params);
      for (int i = 0; i < n; ++i) {
        ln = ln * L;
        mn = mn * M;
      }
      relations = relations &&
                  ln == CycNum::q_power(params, alpha) * CycMatrix::identity(params) &&
                  mn == CycMatrix::identity(params) &&
                  L * M == CycNum::q_power(params, 2) * (M * L);
    }
  }
  r.check("rep generator relations L^n = aI, M^n = I, LM = q^2 ML" + tag, relations);

  if (n <= 5) {
    const RepParams rp(params);
    const RepImages images(rp);
    bool hom = true;
    for (long long p = 0; p < n; ++p) {
      for (long long t = 0; t < n; ++t) {
        for (long long rr = 0; rr < n; ++rr) {
          for (long long ss = 0; ss < n; ++ss) {
            const CycNum scalar = CycNum::q_power(params, p * ss - rr * t);
            hom = hom && images.image(p, t) * images.image(rr, ss) ==
                             scalar * images.image(p + rr, t + ss);
          }
        }
      }
    }
    r.check("rep homomorphism law on all basis pairs" + tag, hom);
  }

  const RepParams canonical(params);
  r.check("rep matrix-unit witness completes all units" + tag,
          matrix_unit_witness(canonical).all_ok());

  const RepImages canonical_images(canonical);
  r.check("rep center triviality rho(e_{n,0}) = rho(e_{0,n}) = I" + tag,
          canonical_images.image(n, 0) == CycMatrix::identity(params) &&
              canonical_images.image(0, n) == CycMatrix::identity(params));

  Sl2WordGen words(0xf1bed, 10);
  bool fixed = true;
  for (int t = 0; t < 100; ++t) {
    fixed = fixed && is_fixed_by(canonical, words.next());
  }
  r.check("rep canonical class fixed by random SL2 elements" + tag, fixed);
}

inline void run_conjugator_suite(Runner& r, int n) {
  const CycParams params(n);
  const RepParams canonical(params);
  const std::string tag = " (n=" + std::to_string(n) + ")";
  const SL2Matrix s = SL2Matrix::S();
  const SL2Matrix t = SL2Matrix::T();

  std::vector<SL2Matrix> suite{s, t, s * t, t * s};
  Sl2WordGen words(0xc0de + static_cast<unsigned>(n), 12);
  for (int i = 0; i < 10; ++i) suite.push_back(words.next());

  bool conj_ok = true;
  bool left_all = true;
  bool right_all = true;
  bool trace_ok = true;
  bool nu_ok = true;
  for (const SL2Matrix& B : suite) {
    const ConjResult res = conj_any(B, params);
    const ConjugationCheck check = verify_conjugation(res.C, B, canonical);
    conj_ok = conj_ok && check.ok;
    left_all = left_all && (check.orientation == Orientation::left ||
                            check.orientation == Orientation::both);
    right_all = right_all && (check.orientation == Orientation::right ||
                              check.orientation == Orientation::both);
    const auto nu = cc_star_scalar(res.C);
    nu_ok = nu_ok && nu && *nu == res.nu;
    if (res.path.kind == PathKind::direct) {
      const long long kb = *k_b(B, params);
      const CycNum trace = mat_trace(res.C);
      trace_ok = trace_ok &&
                 (kb == 0 ? trace == CycNum(params, n)
                          : trace == Integer(legendre(kb, n)) * gauss_sum_exact(params, 1));
    }
  }
  r.check("conjugation identity over fixed suite" + tag, conj_ok);
  r.check("conjugation orientation globally consistent" + tag, left_all || right_all);
  r.check("CC* = nu I with nu = n (direct) / n^2 (composed)" + tag, nu_ok);
  r.check("trace identity Tr C = (K_B/n) G(1)" + tag, trace_ok);

  bool det_ok = true;
  int det_runs = 0;
  for (const SL2Matrix& B : suite) {
    if (detail::mod_floor(B.b, n) == 0 || det_runs >= 4) continue;
    ++det_runs;
    const CycNum det = mat_det(conj_direct(B, params).to_cyc());
    det_ok = det_ok &&
             det * det.conj() ==
                 CycNum(params, boost::multiprecision::pow(Integer(n),
                                                           static_cast<unsigned>(n)));
  }
  r.check("det modulus det conj(det) = n^n" + tag, det_ok);

  if (n <= 5) {
    bool cocycle_ok = true;
    Sl2WordGen pair_words(0xabba + static_cast<unsigned>(n), 10);
    int pairs = 0;
    while (pairs < 8) {
      const SL2Matrix B1 = pair_words.next_direct(n);
      const SL2Matrix B2 = pair_words.next_direct(n);
      if (detail::mod_floor((B1 * B2).b, n) == 0) continue;
      ++pairs;
      const auto res = cocycle_scalar(B1, B2, params);
      cocycle_ok = cocycle_ok && res && res->modulus_ok &&
                   res->expected_modulus == n;
    }
    r.check("cocycle scalar modulus lambda conj(lambda) = n" + tag, cocycle_ok);
  }
}

/// Full invariant battery; returns true when every check passes.
inline bool run_selftest(std::ostream& out) {
  Runner runner(out);
  std::mt19937_64 rng(0x5e1f7e57);
  run_numtheory_suite(runner);
  for (int n : {3, 5, 7}) {
    run_cyclotomic_suite(runner, n, rng);
    run_matrix_suite(runner, n, rng);
    run_torus_suite(runner, n, rng);
    run_rep_suite(runner, n);
    run_conjugator_suite(runner, n);
  }
  out << (runner.failures() == 0 ? "selftest: all checks passed\n"
                                 : "selftest: " + std::to_string(runner.failures()) +
                                       " check(s) FAILED\n");
  return runner.failures() == 0;
}

}  // namespace qtorus::selftest
