#pragma once

#include "demflag/character.hpp"
#include "demflag/weyl.hpp"

namespace demflag {

/// The Demazure operator D_i on the character ring, in exponent-ladder form:
/// n = mu(h_i) >= 0 gives e^mu + ... + e^{mu - n alpha_i}, n = -1 gives 0,
/// n <= -2 gives -(e^{mu + alpha_i} + ... + e^{mu + (-n-1) alpha_i}).
template <WeylDatum D>
FormalCharacter demazure_step(const D& datum, int node, const FormalCharacter& f) {
  const std::size_t k = datum.slot(node);
  const Weight& a = datum.simple_root(node);
  FormalCharacter out(f.datum());
  for (const auto& [mu, c] : f) {
    const std::int64_t n = mu.h[k];
    if (n >= 0) {
      Weight w = mu;
      for (std::int64_t j = 0; j <= n; ++j, w -= a) out.add(w, c);
    } else if (n <= -2) {
      Weight w = mu + a;
      for (std::int64_t j = 1; j <= -n - 1; ++j, w += a) out.add(w, -c);
    }
  }
  return out;
}

template <WeylDatum D>
FormalCharacter demazure_word_char(const D& datum, const WeylWord& w, const Weight& seed) {
  check_word(datum, w);
  FormalCharacter f(datum.label(), seed);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) f = demazure_step(datum, *it, f);
  return f;
}

/// Weyl character of the irreducible module V(lambda), as the Demazure
/// character of the longest element.
inline FormalCharacter weyl_character_finite(const RootDatum& rd, const Weight& lambda) {
  if (!rd.is_dominant(lambda)) throw Error(ErrorKind::NotDominant, "weyl_character_finite needs a dominant weight");
  return demazure_word_char(rd, rd.longest_word(), lambda);
}

inline GradedClassicalCharacter project_graded_classical(const AffineDatum& ad, const FormalCharacter& f) {
  if (f.datum() != ad.label()) throw Error(ErrorKind::DatumMismatch, f.datum() + " is not over " + ad.label());
  GradedClassicalCharacter g(ad.finite().label());
  for (const auto& [mu, c] : f) g.add(ad.restrict_classical(mu), mu.d, c);
  return g;
}

inline FormalCharacter forget_grading(const GradedClassicalCharacter& g) {
  FormalCharacter f(g.datum());
  for (const auto& [key, c] : g) f.add(Weight(key.h, 0), c);
  return f;
}

inline GradedClassicalCharacter shift_grade(const GradedClassicalCharacter& g, std::int64_t m) {
  GradedClassicalCharacter out(g.datum());
  for (const auto& [key, c] : g) out.add(GradedWeight{key.grade + m, key.h}, c);
  return out;
}

/// Each grade slice is fixed by every simple reflection of the finite Weyl group.
inline bool check_w_invariance_per_grade(const RootDatum& rd, const GradedClassicalCharacter& g) {
  for (const auto& [key, c] : g) {
    for (int i : rd.nodes()) {
      const Weight moved = reflect_weight(rd, i, Weight(key.h, 0));
      if (g.coeff(moved, key.grade) != c) return false;
    }
  }
  return true;
}

inline bool check_w_invariance(const RootDatum& rd, const FormalCharacter& f) {
  for (const auto& [mu, c] : f)
    for (int i : rd.nodes())
      if (f.coeff(reflect_weight(rd, i, mu)) != c) return false;
  return true;
}

}  // namespace demflag
