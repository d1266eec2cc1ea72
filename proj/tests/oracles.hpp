#pragma once

// Test-only reference computations.  Nothing here calls the Demazure operator,
// the path model or the flag code, so they can check those independently.

#include "demflag/root_datum.hpp"

#include <random>

namespace demflag::oracle {

/// Weyl dimension formula prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>.
inline std::int64_t weyl_dimension(const RootDatum& rd, const Weight& lambda) {
  const int n = rd.rank();
  // squared lengths up to scale, from c_ij (a_i,a_i) = c_ji (a_j,a_j)
  std::vector<Rational> len(n, Rational(0));
  len[0] = 1;
  for (int pass = 0; pass < n; ++pass)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (len[i] != 0 && len[j] == 0 && rd.cartan_matrix()[i][j] != 0)
          len[j] = len[i] * Rational(rd.cartan_matrix()[i][j], rd.cartan_matrix()[j][i]);
  Rational dim = 1;
  for (const auto& beta : rd.positive_roots()) {
    Rational blen = 0;  // (beta, beta) = sum n_i n_j (a_i, a_j), (a_i,a_j) = c_ij len_i / 2
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) blen += Rational(beta[i] * beta[j]) * Rational(rd.cartan_matrix()[i][j]) * len[i] / 2;
    Rational top = 0, bottom = 0;
    for (int i = 0; i < n; ++i) {
      const Rational w = Rational(beta[i]) * len[i] / blen;
      top += w * (lambda.h[i] + 1);
      bottom += w;
    }
    dim *= top / bottom;
  }
  return dim.numerator();
}

/// lambda - mu in Q^+ by enumeration of coefficient vectors 0..bound.
inline bool dominance_by_enumeration(const RootDatum& rd, const Weight& mu, const Weight& lambda, int bound) {
  const int n = rd.rank();
  std::vector<std::int64_t> coef(n, 0);
  for (;;) {
    Weight s = mu;
    for (int j = 0; j < n; ++j) s += coef[j] * rd.simple_root(j + 1);
    if (s == lambda) return true;
    int k = 0;
    while (k < n && ++coef[k] > bound) coef[k++] = 0;
    if (k == n) return false;
  }
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

}  // namespace demflag::oracle
