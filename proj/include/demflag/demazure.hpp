#pragma once

#include "demflag/charring.hpp"

namespace demflag {

/// D(level, lambda, grade): the g-stable Demazure module whose extremal weight
/// is level*Lambda_0 + w0(lambda) + grade*delta.
struct DemazureLabel {
  std::int64_t level = 1;
  Weight lambda;
  std::int64_t grade = 0;
};

/// The affine weight level*Lambda_0 + w0 lambda + grade*delta.
inline Weight extremal_weight(const AffineDatum& ad, const DemazureLabel& lab) {
  Weight target = ad.embed_classical(apply_w0(ad.finite(), lab.lambda));
  target.h[0] += lab.level;
  target.d += lab.grade;
  return target;
}

inline void validate_label(const AffineDatum& ad, const DemazureLabel& lab) {
  if (lab.lambda.size() != ad.finite().dim())
    throw Error(ErrorKind::IndexOutOfRange, "lambda has the wrong number of h-values for " + ad.finite().label());
  if (lab.level <= 0) throw Error(ErrorKind::ZeroLevel, "Demazure level must be positive");
  if (!ad.finite().is_dominant(lab.lambda)) throw Error(ErrorKind::NotDominant, "lambda must be dominant");
}

/// (Lambda, sigma) with sigma Lambda = level*Lambda_0 + w0 lambda + grade*delta.
inline std::pair<Weight, WeylWord> solve_extremal(const AffineDatum& ad, const DemazureLabel& lab) {
  validate_label(ad, lab);
  return make_dominant(ad, extremal_weight(ad, lab));
}

inline GradedClassicalCharacter demazure_character(const AffineDatum& ad, const DemazureLabel& lab) {
  const auto [Lambda, sigma] = solve_extremal(ad, lab);
  return project_graded_classical(ad, demazure_word_char(ad, sigma, Lambda));
}

inline std::int64_t demazure_dim(const AffineDatum& ad, const DemazureLabel& lab) {
  return demazure_character(ad, lab).mass();
}

}  // namespace demflag
