#pragma once

// JSON forms of the library's values. Cyclotomic coefficients are decimal
// strings so consumers never see 64-bit overflow; a CycNum is the array of
// its n-1 coefficients; a PowMatrix carries its own (n, q_exp); a
// CycMatrix is the nested array of coefficient arrays. The report schema
// is stable: parse(print(report)) reproduces the report exactly.

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qtorus/conjugator.hpp"
#include "qtorus/cyclotomic.hpp"
#include "qtorus/matrix.hpp"
#include "qtorus/rep.hpp"
#include "qtorus/torus.hpp"

namespace qtorus::jsonio {

using nlohmann::json;

inline json to_json(const CycNum& x) {
  json a = json::array();
  for (const auto& c : x.coeffs()) a.push_back(c.str());
  return a;
}

inline CycNum cyc_from_json(const CycParams& params, const json& j) {
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.emplace_back(c.get<std::string>());
  return CycNum::from_coeffs(params, std::move(coeffs));
}

inline json to_json(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

inline std::complex<double> complex_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline json to_json(const SL2Matrix& b) {
  return json::array({b.a, b.b, b.c, b.d});
}

inline SL2Matrix sl2_from_json(const json& j) {
  return {j.at(0).get<long long>(), j.at(1).get<long long>(),
          j.at(2).get<long long>(), j.at(3).get<long long>()};
}

inline json to_json(const PowMatrix& m) {
  return json{{"n", m.params().n()},
              {"q_exp", m.params().q_exp()},
              {"exps", m.exps()}};
}

inline PowMatrix pow_from_json(const json& j) {
  return PowMatrix(CycParams(j.at("n").get<int>(), j.at("q_exp").get<int>()),
                   j.at("exps").get<std::vector<std::vector<long long>>>());
}

inline json to_json(const CycMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline CycMatrix mat_from_json(const CycParams& params, const json& j) {
  CycMatrix m(params);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t k = 0; k < m.dim(); ++k) {
      m.at(i, k) = cyc_from_json(params, j.at(i).at(k));
    }
  }
  return m;
}

inline json to_json(const TorusElement& x) {
  json terms = json::array();
  for (const auto& [e, c] : x.terms()) {
    terms.push_back(json{{"r", e.r}, {"s", e.s}, {"coeff", to_json(c)}});
  }
  return terms;
}

inline TorusElement torus_from_json(const CycParams& params, const json& j) {
  TorusElement x(params);
  for (const auto& term : j) {
    x.add_term({term.at("r").get<long long>(), term.at("s").get<long long>()},
               cyc_from_json(params, term.at("coeff")));
  }
  return x;
}

inline std::string orientation_name(Orientation o) {
  switch (o) {
    case Orientation::left: return "left";
    case Orientation::right: return "right";
    case Orientation::both: return "both";
    case Orientation::none: return "none";
  }
  return "none";
}

inline Orientation orientation_from_name(const std::string& s) {
  if (s == "left") return Orientation::left;
  if (s == "right") return Orientation::right;
  if (s == "both") return Orientation::both;
  return Orientation::none;
}

inline std::string legendre_name(LegendreClass c) {
  switch (c) {
    case LegendreClass::plus_one: return "+1";
    case LegendreClass::minus_one: return "-1";
    case LegendreClass::zero_class: return "zero-class";
  }
  return "zero-class";
}

inline LegendreClass legendre_from_name(const std::string& s) {
  if (s == "+1") return LegendreClass::plus_one;
  if (s == "-1") return LegendreClass::minus_one;
  return LegendreClass::zero_class;
}

inline json to_json(const ConjPath& path) {
  json j{{"kind", path.kind == PathKind::direct ? "direct" : "composed"}};
  if (path.factors) {
    j["factors"] = json::array(
        {to_json(path.factors->first), to_json(path.factors->second)});
  } else {
    j["factors"] = nullptr;
  }
  return j;
}

inline ConjPath path_from_json(const json& j) {
  ConjPath path;
  path.kind = j.at("kind").get<std::string>() == "direct" ? PathKind::direct
                                                          : PathKind::composed;
  if (!j.at("factors").is_null()) {
    path.factors = std::make_pair(sl2_from_json(j.at("factors").at(0)),
                                  sl2_from_json(j.at("factors").at(1)));
  }
  return path;
}

inline json report_to_json(const ConjugationReport& r) {
  json j;
  j["B"] = to_json(r.B);
  j["n"] = r.params.n();
  j["q_exp"] = r.params.q_exp();
  j["path"] = to_json(r.path);
  // Direct-path C is the compact exponent form; composed C is dense.
  j["C"] = r.C_pow ? to_json(*r.C_pow) : to_json(r.C);
  j["nu"] = to_json(r.nu);
  j["cc_star_ok"] = r.cc_star_ok;
  j["K_B"] = r.K_B ? json(*r.K_B) : json(nullptr);
  j["legendre_K"] = r.legendre_K ? json(legendre_name(*r.legendre_K)) : json(nullptr);
  j["trace_exact"] = to_json(r.trace_exact);
  j["trace_identity_ok"] = r.trace_identity_ok ? json(*r.trace_identity_ok) : json(nullptr);
  j["trace_numeric"] = to_json(r.trace_numeric);
  j["trace_closed_form_ok"] =
      r.trace_closed_form_ok ? json(*r.trace_closed_form_ok) : json(nullptr);
  j["det_exact"] = to_json(r.det_exact);
  j["det_modulus_ok"] = r.det_modulus_ok ? json(*r.det_modulus_ok) : json(nullptr);
  j["det_phase_numeric"] = to_json(r.det_phase_numeric);
  j["conjugation_ok"] = r.conjugation_ok;
  j["orientation"] = orientation_name(r.orientation);
  j["trace_det_ratio_numeric"] = to_json(r.trace_det_ratio_numeric);
  j["all_checks_pass"] = r.all_checks_pass();
  return j;
}

inline ConjugationReport report_from_json(const json& j) {
  const CycParams params(j.at("n").get<int>(), j.at("q_exp").get<int>());
  ConjugationReport r(sl2_from_json(j.at("B")), params);
  r.path = path_from_json(j.at("path"));
  if (r.path.kind == PathKind::direct) {
    r.C_pow = pow_from_json(j.at("C"));
    r.C = r.C_pow->to_cyc();
  } else {
    r.C = mat_from_json(params, j.at("C"));
  }
  r.nu = cyc_from_json(params, j.at("nu"));
  r.cc_star_ok = j.at("cc_star_ok").get<bool>();
  if (!j.at("K_B").is_null()) r.K_B = j.at("K_B").get<long long>();
  if (!j.at("legendre_K").is_null()) {
    r.legendre_K = legendre_from_name(j.at("legendre_K").get<std::string>());
  }
  r.trace_exact = cyc_from_json(params, j.at("trace_exact"));
  if (!j.at("trace_identity_ok").is_null()) {
    r.trace_identity_ok = j.at("trace_identity_ok").get<bool>();
  }
  r.trace_numeric = complex_from_json(j.at("trace_numeric"));
  if (!j.at("trace_closed_form_ok").is_null()) {
    r.trace_closed_form_ok = j.at("trace_closed_form_ok").get<bool>();
  }
  r.det_exact = cyc_from_json(params, j.at("det_exact"));
  if (!j.at("det_modulus_ok").is_null()) {
    r.det_modulus_ok = j.at("det_modulus_ok").get<bool>();
  }
  r.det_phase_numeric = complex_from_json(j.at("det_phase_numeric"));
  r.conjugation_ok = j.at("conjugation_ok").get<bool>();
  r.orientation = orientation_from_name(j.at("orientation").get<std::string>());
  r.trace_det_ratio_numeric = complex_from_json(j.at("trace_det_ratio_numeric"));
  return r;
}

}  // namespace qtorus::jsonio
