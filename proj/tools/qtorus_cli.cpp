// Command-line front end: builds conjugating matrices for elements of
// SL2(Z), runs the exact trace/determinant/unitarity checks, and emits
// human-readable or JSON reports.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input.

#include <complex>
#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qtorus/conjugator.hpp"
#include "qtorus/json_io.hpp"
#include "qtorus/rep.hpp"
#include "qtorus/selftest.hpp"
#include "qtorus/sl2_words.hpp"

namespace {

using namespace qtorus;
using nlohmann::json;

SL2Matrix parse_mat(const std::string& text) {
  std::vector<long long> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.push_back(std::stoll(item));
  if (entries.size() != 4) {
    throw std::invalid_argument("matrix must be four comma-separated integers a,b,c,d");
  }
  return {entries[0], entries[1], entries[2], entries[3]};
}

std::string complex_str(const std::complex<double>& z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

std::string path_str(const ConjPath& path) {
  if (path.kind == PathKind::direct) return "direct";
  return "composed via C(" + path.factors->first.to_string() + ") C(" +
         path.factors->second.to_string() + ")*";
}

void print_cyc_matrix(std::ostream& out, const CycMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << "  [";
    for (std::size_t j = 0; j < m.dim(); ++j) {
      out << (j ? ", " : "") << m.at(i, j).to_string();
    }
    out << "]\n";
  }
}

int run_conj(const CycParams& params, const SL2Matrix& B, bool as_json) {
  const ConjResult res = conj_any(B, params);
  if (as_json) {
    json j{{"B", jsonio::to_json(B)},
           {"n", params.n()},
           {"q_exp", params.q_exp()},
           {"path", jsonio::to_json(res.path)},
           {"C", res.C_pow ? jsonio::to_json(*res.C_pow) : jsonio::to_json(res.C)},
           {"nu", jsonio::to_json(res.nu)}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "B = " << B.to_string() << ", n = " << params.n()
            << ", q = z^" << params.q_exp() << "\n";
  std::cout << "path: " << path_str(res.path) << "\n";
  if (res.C_pow) {
    std::cout << "C as exponents of q:\n" << res.C_pow->to_string();
  } else {
    std::cout << "C:\n";
    print_cyc_matrix(std::cout, res.C);
  }
  return 0;
}

void print_report_text(const ConjugationReport& r) {
  std::cout << "B = " << r.B.to_string() << ", n = " << r.params.n()
            << ", q = z^" << r.params.q_exp() << "\n";
  std::cout << "path: " << path_str(r.path) << "\n";
  if (r.C_pow) {
    std::cout << "C as exponents of q:\n" << r.C_pow->to_string();
  } else {
    std::cout << "C:\n";
    print_cyc_matrix(std::cout, r.C);
  }
  std::cout << "conjugation holds: " << (r.conjugation_ok ? "yes" : "NO")
            << " (orientation: " << jsonio::orientation_name(r.orientation) << ")\n";
  std::cout << "C C* = nu I with nu = " << r.nu.to_string()
            << (r.cc_star_ok ? " (as expected)" : " (UNEXPECTED)") << "\n";
  if (r.K_B) {
    std::cout << "K_B = " << *r.K_B << ", Legendre class "
              << jsonio::legendre_name(*r.legendre_K) << "\n";
  } else {
    std::cout << "K_B undefined (n divides b)\n";
  }
  std::cout << "trace = " << r.trace_exact.to_string() << " ~ "
            << complex_str(r.trace_numeric) << "\n";
  if (r.trace_identity_ok) {
    std::cout << "trace identity Tr C = (K_B/n) G(1): "
              << (*r.trace_identity_ok ? "ok" : "FAIL") << "\n";
  }
  if (r.trace_closed_form_ok) {
    std::cout << "trace closed form (K_B/n)(1+i^-n)/(1+i^-1) sqrt(n): "
              << (*r.trace_closed_form_ok ? "ok" : "FAIL") << "\n";
  }
  std::cout << "det = " << r.det_exact.to_string() << "\n";
  if (r.det_modulus_ok) {
    std::cout << "det modulus |det|^2 = n^n: " << (*r.det_modulus_ok ? "ok" : "FAIL")
              << "\n";
  }
  std::cout << "det phase det/n^(n/2) = " << complex_str(r.det_phase_numeric) << "\n";
  std::cout << "Tr(C)/det(C)^(1/n) = " << complex_str(r.trace_det_ratio_numeric)
            << "\n";
}

int run_analyze(const CycParams& params, const SL2Matrix& B, bool as_json) {
  const ConjugationReport report = analyze(B, params);
  if (as_json) {
    std::cout << jsonio::report_to_json(report).dump(2) << "\n";
  } else {
    print_report_text(report);
    std::cout << (report.all_checks_pass() ? "all checks passed\n"
                                           : "SOME CHECKS FAILED\n");
  }
  return report.all_checks_pass() ? 0 : 1;
}

int run_trace(const CycParams& params, const SL2Matrix& B, bool as_json) {
  const ConjugationReport r = analyze(B, params);
  const bool ok = r.trace_identity_ok.value_or(true) &&
                  r.trace_closed_form_ok.value_or(true);
  if (as_json) {
    json j{{"B", jsonio::to_json(B)},
           {"n", params.n()},
           {"q_exp", params.q_exp()},
           {"K_B", r.K_B ? json(*r.K_B) : json(nullptr)},
           {"legendre_K",
            r.legendre_K ? json(jsonio::legendre_name(*r.legendre_K)) : json(nullptr)},
           {"trace_exact", jsonio::to_json(r.trace_exact)},
           {"trace_numeric", jsonio::to_json(r.trace_numeric)},
           {"trace_identity_ok",
            r.trace_identity_ok ? json(*r.trace_identity_ok) : json(nullptr)},
           {"trace_closed_form_ok",
            r.trace_closed_form_ok ? json(*r.trace_closed_form_ok) : json(nullptr)}};
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  if (r.K_B) {
    std::cout << "K_B = " << *r.K_B << ", Legendre class "
              << jsonio::legendre_name(*r.legendre_K) << "\n";
  } else {
    std::cout << "K_B undefined (n divides b); no trace claim on the composed path\n";
  }
  std::cout << "trace = " << r.trace_exact.to_string() << " ~ "
            << complex_str(r.trace_numeric) << "\n";
  if (r.trace_identity_ok) {
    std::cout << "exact identity Tr C = (K_B/n) G(1): "
              << (*r.trace_identity_ok ? "ok" : "FAIL") << "\n";
  }
  if (r.trace_closed_form_ok) {
    const std::complex<double> closed =
        *r.K_B == 0 ? std::complex<double>(params.n(), 0.0)
                    : static_cast<double>(legendre(*r.K_B, params.n())) *
                          gauss_closed_numeric(params.n());
    std::cout << "closed form value " << complex_str(closed) << ": "
              << (*r.trace_closed_form_ok ? "ok" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int run_det(const CycParams& params, const SL2Matrix& B, bool as_json) {
  const ConjugationReport r = analyze(B, params);
  const bool ok = r.det_modulus_ok.value_or(true);
  if (as_json) {
    json j{{"B", jsonio::to_json(B)},
           {"n", params.n()},
           {"q_exp", params.q_exp()},
           {"det_exact", jsonio::to_json(r.det_exact)},
           {"det_modulus_ok", r.det_modulus_ok ? json(*r.det_modulus_ok) : json(nullptr)},
           {"det_phase_numeric", jsonio::to_json(r.det_phase_numeric)}};
    std::cout << j.dump(2) << "\n";
    return ok ? 0 : 1;
  }
  std::cout << "det = " << r.det_exact.to_string() << " ~ "
            << complex_str(r.det_exact.embed()) << "\n";
  if (r.det_modulus_ok) {
    std::cout << "modulus check det conj(det) = n^n: "
              << (*r.det_modulus_ok ? "ok" : "FAIL") << "\n";
  } else {
    std::cout << "modulus check skipped on the composed path\n";
  }
  std::cout << "numeric phase det/n^(n/2) = " << complex_str(r.det_phase_numeric)
            << "\n";
  return ok ? 0 : 1;
}

int run_rep(const CycParams& params, int alpha, int rho_exp, bool as_json) {
  const RepParams rp(params, alpha, rho_exp);
  const RepMatrixPair gens = build_generators(rp);
  const WitnessReport witness = matrix_unit_witness(rp);
  std::size_t units_ok = 0;
  for (const auto& u : witness.units) units_ok += u.ok ? 1 : 0;
  const SL2Matrix s = SL2Matrix::S();
  const SL2Matrix t = SL2Matrix::T();

  if (as_json) {
    json units = json::array();
    for (const auto& u : witness.units) {
      units.push_back(json{{"i", u.i}, {"j", u.j}, {"ok", u.ok}});
    }
    json j{{"n", params.n()},
           {"q_exp", params.q_exp()},
           {"alpha", rp.alpha()},
           {"rho_exp", rp.rho_exp()},
           {"L", jsonio::to_json(gens.L)},
           {"M", jsonio::to_json(gens.M)},
           {"witness",
            json{{"projector_ok", witness.projector_ok},
                 {"units", units},
                 {"all_ok", witness.all_ok()}}},
           {"fixed_by_S", is_fixed_by(rp, s)},
           {"fixed_by_T", is_fixed_by(rp, t)}};
    std::cout << j.dump(2) << "\n";
    return witness.all_ok() ? 0 : 1;
  }

  std::cout << "representation with a = q^" << rp.alpha() << ", b^(1/n) = q^"
            << rp.rho_exp() << " (b = 1), n = " << params.n() << "\n";
  std::cout << "L:\n";
  print_cyc_matrix(std::cout, gens.L);
  std::cout << "M:\n";
  print_cyc_matrix(std::cout, gens.M);
  std::cout << "matrix-unit witness: projector "
            << (witness.projector_ok ? "ok" : "FAIL") << ", units " << units_ok << "/"
            << witness.units.size() << " ok\n";
  for (const auto& [name, B] : {std::pair<std::string, SL2Matrix>{"S", s},
                                std::pair<std::string, SL2Matrix>{"T", t}}) {
    std::cout << "fixed by " << name << " " << B.to_string() << ": "
              << (is_fixed_by(rp, B) ? "yes" : "no");
    const auto bound = fixed_order_bound(B);
    if (bound) {
      std::cout << "  (order bound |det(B-I)| = " << *bound << ")";
    } else {
      std::cout << "  (order bound inapplicable: 1 is an eigenvalue)";
    }
    std::cout << "\n";
  }
  return witness.all_ok() ? 0 : 1;
}

int run_cocycle(const CycParams& params, const SL2Matrix& B1, const SL2Matrix& B2,
                bool as_json) {
  const auto res = cocycle_scalar(B1, B2, params);
  if (!res) {
    std::cerr << "cocycle: C(B1) C(B2) is not proportional to C(B1 B2)\n";
    return 1;
  }
  if (as_json) {
    json j{{"B1", jsonio::to_json(B1)},
           {"B2", jsonio::to_json(B2)},
           {"n", params.n()},
           {"q_exp", params.q_exp()},
           {"lambda", jsonio::to_json(res->lambda)},
           {"lambda_numeric", jsonio::to_json(res->lambda.embed())},
           {"expected_modulus", res->expected_modulus.str()},
           {"modulus_ok", res->modulus_ok}};
    std::cout << j.dump(2) << "\n";
    return res->modulus_ok ? 0 : 1;
  }
  std::cout << "C(B1) C(B2) = lambda C(B1 B2) with lambda = "
            << res->lambda.to_string() << " ~ " << complex_str(res->lambda.embed())
            << "\n";
  std::cout << "paths: B1 " << path_str(res->path1) << ", B2 " << path_str(res->path2)
            << ", B1 B2 " << path_str(res->path12) << "\n";
  std::cout << "modulus check lambda conj(lambda) = " << res->expected_modulus.str()
            << ": " << (res->modulus_ok ? "ok" : "FAIL") << "\n";
  return res->modulus_ok ? 0 : 1;
}

int run_scan(const CycParams& params, int count, std::uint64_t seed, bool as_json) {
  Sl2WordGen gen(seed);
  int failures = 0;
  int direct = 0;
  json items = json::array();
  if (!as_json) {
    std::cout << "idx  word          B                 path      checks\n";
  }
  for (int i = 0; i < count; ++i) {
    auto [B, word] = gen.next_word();
    const ConjugationReport r = analyze(B, params);
    const bool ok = r.all_checks_pass();
    if (!ok) ++failures;
    if (r.path.kind == PathKind::direct) ++direct;
    if (as_json) {
      items.push_back(json{{"index", i},
                           {"word", word.empty() ? "<empty>" : word},
                           {"B", jsonio::to_json(B)},
                           {"path", r.path.kind == PathKind::direct ? "direct" : "composed"},
                           {"K_B", r.K_B ? json(*r.K_B) : json(nullptr)},
                           {"conjugation_ok", r.conjugation_ok},
                           {"all_checks_pass", ok}});
    } else {
      std::ostringstream line;
      line.width(3);
      line << i;
      line << "  ";
      std::string w = word.empty() ? "<empty>" : word;
      w.resize(12, ' ');
      line << w << "  ";
      std::string bs = B.to_string();
      bs.resize(16, ' ');
      line << bs << "  " << (r.path.kind == PathKind::direct ? "direct  " : "composed")
           << "  " << (ok ? "pass" : "FAIL");
      std::cout << line.str() << "\n";
    }
  }
  if (as_json) {
    json j{{"n", params.n()},
           {"q_exp", params.q_exp()},
           {"seed", seed},
           {"count", count},
           {"direct_paths", direct},
           {"composed_paths", count - direct},
           {"failures", failures},
           {"items", items}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << count << " matrices (" << direct << " direct, " << count - direct
              << " composed), " << failures << " failure(s)\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact SL2(Z) conjugating-matrix engine over the quantum torus"};
  app.require_subcommand(1);

  int n = 0;
  int q_exp = 1;
  std::string mat_text, mat1_text, mat2_text;
  bool as_json = false;
  int alpha = 0;
  int rho_exp = 0;
  int count = 10;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_mat) {
    cmd->add_option("--n", n, "odd prime order of the root of unity")->required();
    cmd->add_option("--q-exp", q_exp, "exponent k with q = z^k (default 1)");
    cmd->add_flag("--json", as_json, "emit JSON");
    if (with_mat) {
      cmd->add_option("--mat", mat_text, "SL2(Z) matrix as a,b,c,d")->required();
    }
  };

  CLI::App* conj_cmd = app.add_subcommand("conj", "conjugating matrix C(B) and path");
  add_common(conj_cmd, true);
  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "full conjugation report for one B");
  add_common(analyze_cmd, true);
  CLI::App* trace_cmd =
      app.add_subcommand("trace", "exact trace, K_B, Legendre value, closed form");
  add_common(trace_cmd, true);
  CLI::App* det_cmd =
      app.add_subcommand("det", "exact determinant, modulus check, numeric phase");
  add_common(det_cmd, true);

  CLI::App* rep_cmd =
      app.add_subcommand("rep", "generator matrices, matrix-unit witness, fixedness");
  add_common(rep_cmd, false);
  rep_cmd->add_option("--alpha", alpha, "a = q^alpha");
  rep_cmd->add_option("--rho-exp", rho_exp, "b^(1/n) = q^rho_exp");

  CLI::App* cocycle_cmd =
      app.add_subcommand("cocycle", "projective defect of C(B1) C(B2) vs C(B1 B2)");
  cocycle_cmd->add_option("--n", n, "odd prime order of the root of unity")->required();
  cocycle_cmd->add_option("--q-exp", q_exp, "exponent k with q = z^k (default 1)");
  cocycle_cmd->add_flag("--json", as_json, "emit JSON");
  cocycle_cmd->add_option("--mat1", mat1_text, "first matrix as a,b,c,d")->required();
  cocycle_cmd->add_option("--mat2", mat2_text, "second matrix as a,b,c,d")->required();

  CLI::App* scan_cmd =
      app.add_subcommand("scan", "analyze pseudo-random generator words");
  add_common(scan_cmd, false);
  scan_cmd->add_option("--count", count, "number of matrices")->required();
  scan_cmd->add_option("--seed", seed, "word generator seed (default 0)");

  CLI::App* selftest_cmd =
      app.add_subcommand("selftest", "run the invariant suite at n = 3, 5, 7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (selftest_cmd->parsed()) {
      return qtorus::selftest::run_selftest(std::cout) ? 0 : 1;
    }
    const CycParams params(n, q_exp);
    if (conj_cmd->parsed()) return run_conj(params, parse_mat(mat_text), as_json);
    if (analyze_cmd->parsed()) return run_analyze(params, parse_mat(mat_text), as_json);
    if (trace_cmd->parsed()) return run_trace(params, parse_mat(mat_text), as_json);
    if (det_cmd->parsed()) return run_det(params, parse_mat(mat_text), as_json);
    if (rep_cmd->parsed()) return run_rep(params, alpha, rho_exp, as_json);
    if (cocycle_cmd->parsed()) {
      return run_cocycle(params, parse_mat(mat1_text), parse_mat(mat2_text), as_json);
    }
    if (scan_cmd->parsed()) return run_scan(params, count, seed, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
