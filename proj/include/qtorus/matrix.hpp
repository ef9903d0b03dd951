#pragma once

// Exact n x n linear algebra over Z[zeta]: products, conjugate transpose,
// trace, fraction-free determinant, proportionality testing. PowMatrix is
// the compact form for matrices whose every entry is a single power of q
// (the conjugating matrices and generator images all have this shape).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/cyclotomic.hpp"

namespace qtorus {

struct MatrixUnit {
  std::size_t i = 0;
  std::size_t j = 0;
};

class CycMatrix {
 public:
  explicit CycMatrix(CycParams params)
      : params_(params),
        n_(static_cast<std::size_t>(params.n())),
        entries_(n_ * n_, CycNum(params)) {}

  static CycMatrix identity(CycParams params) {
    CycMatrix m(params);
    for (std::size_t i = 0; i < m.n_; ++i) m.at(i, i) = CycNum(params, 1);
    return m;
  }

  /// E_{i,j}: zero except for a 1 in entry (i, j).
  static CycMatrix matrix_unit(CycParams params, MatrixUnit u) {
    CycMatrix m(params);
    m.at(u.i, u.j) = CycNum(params, 1);
    return m;
  }

  std::size_t dim() const { return n_; }
  const CycParams& params() const { return params_; }

  CycNum& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const CycNum& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  CycMatrix& operator+=(const CycMatrix& o) {
    check_params(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }

  friend CycMatrix operator+(CycMatrix a, const CycMatrix& b) { return a += b; }

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
    a.check_params(b);
    CycMatrix r(a.params_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        const CycNum& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) {
          const CycNum& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    }
    return r;
  }

  friend CycMatrix operator*(const CycNum& s, CycMatrix a) {
    for (auto& e : a.entries_) e = s * e;
    return a;
  }

  friend CycMatrix operator*(const Integer& s, CycMatrix a) {
    for (auto& e : a.entries_) e = s * e;
    return a;
  }

  friend bool operator==(const CycMatrix&, const CycMatrix&) = default;

 private:
  void check_params(const CycMatrix& o) const {
    if (!(params_ == o.params_)) {
      throw std::invalid_argument("CycMatrix: mismatched parameters");
    }
  }

  CycParams params_;
  std::size_t n_;
  std::vector<CycNum> entries_;  // row-major
};

/// Entry (i,j) of the result is conj of entry (j,i).
inline CycMatrix ctranspose(const CycMatrix& a) {
  CycMatrix r(a.params());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      r.at(i, j) = a.at(j, i).conj();
    }
  }
  return r;
}

inline CycNum mat_trace(const CycMatrix& a) {
  CycNum t(a.params());
  for (std::size_t i = 0; i < a.dim(); ++i) t += a.at(i, i);
  return t;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Pivots are
/// found top-to-bottom in each column; row swaps flip the sign. Every
/// division is exact by the Bareiss invariant, so a failed division is a
/// defect and surfaces as ExactDivisionError.
inline CycNum mat_det(const CycMatrix& a) {
  const std::size_t n = a.dim();
  CycMatrix m = a;
  CycNum prev(a.params(), 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && m.at(pivot_row, k).is_zero()) ++pivot_row;
    if (pivot_row == n) return CycNum(a.params());  // singular
    if (pivot_row != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(k, j), m.at(pivot_row, j));
      }
      sign = -sign;
    }
    const CycNum& pivot = m.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m.at(i, j) = exact_div(m.at(i, j) * pivot - m.at(i, k) * m.at(k, j), prev);
      }
      m.at(i, k) = CycNum(a.params());
    }
    prev = pivot;
  }
  CycNum det = m.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

/// The scalar lambda with a = lambda * b, if it exists. The candidate is
/// read off the first nonzero entry of b (a unit for every matrix the
/// conjugator pipeline produces) and then verified on all n^2 entries.
inline std::optional<CycNum> proportionality_scalar(const CycMatrix& a,
                                                    const CycMatrix& b) {
  if (!(a.params() == b.params())) {
    throw std::invalid_argument("proportionality_scalar: mismatched parameters");
  }
  const std::size_t n = a.dim();
  std::optional<CycNum> lambda;
  for (std::size_t i = 0; i < n && !lambda; ++i) {
    for (std::size_t j = 0; j < n && !lambda; ++j) {
      if (!b.at(i, j).is_zero()) {
        lambda = try_exact_div(a.at(i, j), b.at(i, j));
        if (!lambda) return std::nullopt;
      }
    }
  }
  if (!lambda) {
    throw std::invalid_argument("proportionality_scalar: b is the zero matrix");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(a.at(i, j) == *lambda * b.at(i, j))) return std::nullopt;
    }
  }
  return lambda;
}

/// Dense matrix (q^(exps[i][j])): O(n^2) integer storage, every entry a
/// nonzero power of q. Expands lazily to CycMatrix for general arithmetic.
class PowMatrix {
 public:
  PowMatrix(CycParams params, std::vector<std::vector<long long>> exps)
      : params_(params), exps_(std::move(exps)) {
    const std::size_t n = static_cast<std::size_t>(params.n());
    if (exps_.size() != n) {
      throw std::invalid_argument("PowMatrix: exponent grid must be n x n");
    }
    for (auto& row : exps_) {
      if (row.size() != n) {
        throw std::invalid_argument("PowMatrix: exponent grid must be n x n");
      }
      for (auto& e : row) e = detail::mod_floor(e, params.n());
    }
  }

  const CycParams& params() const { return params_; }
  std::size_t dim() const { return exps_.size(); }
  long long exp_at(std::size_t i, std::size_t j) const { return exps_[i][j]; }
  const std::vector<std::vector<long long>>& exps() const { return exps_; }

  CycMatrix to_cyc() const {
    CycMatrix m(params_);
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        m.at(i, j) = CycNum::q_power(params_, exps_[i][j]);
      }
    }
    return m;
  }

  /// Conjugate transpose stays a power matrix: exps' = (n - e_ji) mod n.
  PowMatrix ctranspose() const {
    std::vector<std::vector<long long>> t(dim(), std::vector<long long>(dim()));
    for (std::size_t i = 0; i < dim(); ++i) {
      for (std::size_t j = 0; j < dim(); ++j) {
        t[i][j] = detail::mod_floor(params_.n() - exps_[j][i], params_.n());
      }
    }
    return PowMatrix(params_, std::move(t));
  }

  CycNum trace() const {
    CycNum t(params_);
    for (std::size_t i = 0; i < dim(); ++i) {
      t += CycNum::q_power(params_, exps_[i][i]);
    }
    return t;
  }

  friend bool operator==(const PowMatrix&, const PowMatrix&) = default;

  std::string to_string() const {
    std::string out;
    for (const auto& row : exps_) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        out += (j ? " " : "") + std::to_string(row[j]);
      }
      out += "\n";
    }
    return out;
  }

 private:
  CycParams params_;
  std::vector<std::vector<long long>> exps_;
};

}  // namespace qtorus
