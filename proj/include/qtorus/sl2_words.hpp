#pragma once

// Pseudo-random elements of SL2(Z) as bounded words in the generators
// S = (0,-1;1,0) and T = (1,1;0,1). Sampling by words keeps det = 1 by
// construction and produces both unit and non-unit upper-right entries
// mod n, so both conjugator paths get exercised. Draws avoid
// std::uniform_int_distribution so a fixed seed replays identically on
// every standard library.

#include <cstdint>
#include <random>
#include <string>
#include <utility>

#include "qtorus/torus.hpp"

namespace qtorus {

class Sl2WordGen {
 public:
  explicit Sl2WordGen(std::uint64_t seed, int max_len = 12)
      : rng_(seed), max_len_(max_len) {}

  /// Next word and its matrix; the empty word is the identity.
  std::pair<SL2Matrix, std::string> next_word() {
    const int len = static_cast<int>(rng_() % static_cast<std::uint64_t>(max_len_ + 1));
    SL2Matrix m = SL2Matrix::identity();
    std::string word;
    for (int i = 0; i < len; ++i) {
      if (rng_() % 2 == 0) {
        m = m * SL2Matrix::S();
        word += 'S';
      } else {
        m = m * SL2Matrix::T();
        word += 'T';
      }
    }
    return {m, std::move(word)};
  }

  SL2Matrix next() { return next_word().first; }

  /// Next matrix whose upper-right entry is a unit mod n (direct path).
  SL2Matrix next_direct(long long n) {
    for (;;) {
      SL2Matrix m = next();
      if (detail::mod_floor(m.b, n) != 0) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
  int max_len_;
};

}  // namespace qtorus
