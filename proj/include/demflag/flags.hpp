#pragma once

#include "demflag/demazure.hpp"
#include "demflag/short_subdatum.hpp"

#include <set>

namespace demflag {

struct FlagPiece {
  Weight lambda;
  std::int64_t grade = 0;
  std::int64_t mult = 1;
  friend bool operator==(const FlagPiece&, const FlagPiece&) = default;
  friend bool operator<(const FlagPiece& a, const FlagPiece& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.mult < b.mult;
  }
};

/// Quotients D(level, lambda_j, m_j) with multiplicities, in extraction order.
struct FlagDecomposition {
  std::string datum;
  std::int64_t level = 1;
  std::vector<FlagPiece> pieces;

  std::multiset<FlagPiece> as_multiset() const { return {pieces.begin(), pieces.end()}; }
};

/// Sum of mult * tau_grade(ch D(level, lambda, 0)) over the pieces.
inline GradedClassicalCharacter flag_character(const AffineDatum& ad, const FlagDecomposition& fd) {
  GradedClassicalCharacter out(ad.finite().label());
  for (const auto& p : fd.pieces)
    out += p.mult * shift_grade(demazure_character(ad, {fd.level, p.lambda, 0}), p.grade);
  return out;
}

namespace detail {

inline Rational height(const RootDatum& rd, const Weight& mu) {
  Rational s = 0;
  for (const auto& q : rd.root_coordinates(mu)) s += q;
  return s;
}

}  // namespace detail

/// Triangular leading-term subtraction of level-`level` Demazure characters.
///
/// Each round takes a dominance-maximal classical weight of the residual
/// (maximal height, ties broken lexicographically in the given direction),
/// its lowest grade and coefficient, and subtracts that many shifted copies of
/// ch D(level, mu, 0).
inline FlagDecomposition greedy_decompose(const AffineDatum& ad, const GradedClassicalCharacter& g, std::int64_t level,
                                          TieBreak order = TieBreak::SmallestFirst) {
  const RootDatum& rd = ad.finite();
  if (level <= 0) throw Error(ErrorKind::ZeroLevel, "flag level must be positive");
  if (!check_w_invariance_per_grade(rd, g))
    throw Error(ErrorKind::NonDominantLeading, "character is not W-invariant in every grade");

  FlagDecomposition fd{rd.label(), level, {}};
  std::map<Weight, GradedClassicalCharacter> cache;
  GradedClassicalCharacter residual = g;
  while (!residual.empty()) {
    std::optional<Weight> lead;
    Rational best;
    for (const auto& [key, c] : residual) {
      Weight w(key.h, 0);
      const Rational ht = detail::height(rd, w);
      bool better = !lead || ht > best;
      if (lead && ht == best) better = order == TieBreak::SmallestFirst ? w < *lead : *lead < w;
      if (better) {
        lead = w;
        best = ht;
      }
    }
    if (!rd.is_dominant(*lead)) throw Error(ErrorKind::NonDominantLeading, "leading weight is not dominant");
    std::int64_t grade = 0, c = 0;
    for (const auto& [key, coeff] : residual)
      if (key.h == lead->h) {
        grade = key.grade;
        c = coeff;
        break;  // map order puts the lowest grade first
      }
    if (c < 0) throw Error(ErrorKind::NegativeMultiplicity, "residual coefficient is negative; no flag at this level");
    auto it = cache.find(*lead);
    if (it == cache.end()) it = cache.emplace(*lead, demazure_character(ad, {level, *lead, 0})).first;
    residual -= c * shift_grade(it->second, grade);
    fd.pieces.push_back({*lead, grade, c});
  }
  return fd;
}

inline FlagDecomposition level_flag(const AffineDatum& ad, std::int64_t level, std::int64_t target,
                                    const Weight& lambda) {
  if (!ad.finite().simply_laced())
    throw Error(ErrorKind::NotSimplyLaced, "level flags are only guaranteed for simply-laced types");
  if (level < 1) throw Error(ErrorKind::ZeroLevel, "level must be positive");
  if (target <= level) throw Error(ErrorKind::InvalidArgument, "target level must exceed the level");
  return greedy_decompose(ad, demazure_character(ad, {level, lambda, 0}), target);
}

struct GradedWeyl {
  GradedClassicalCharacter character;
  FlagDecomposition flag;  // level-1 Demazure flag
};

/// Graded character of the local Weyl module W^c(lambda) and its level-1 flag.
///
/// Simply-laced: W^c(lambda) = D(1, lambda).  Otherwise the level-1 Demazure
/// module of the short subdatum at lambda-bar is decomposed at level r^vee and
/// each piece (mu_j, m_j) is lifted to (eta_lambda(mu_j), m_j).
inline GradedWeyl graded_weyl_character(const RootDatum& rd, const Weight& lambda) {
  if (lambda.size() != rd.dim()) throw Error(ErrorKind::IndexOutOfRange, "lambda has the wrong size");
  if (!rd.is_dominant(lambda)) throw Error(ErrorKind::NotDominant, "lambda must be dominant");
  const AffineDatum ad = affinize(rd);
  if (rd.simply_laced()) {
    FlagDecomposition fd{rd.label(), 1, {{lambda, 0, 1}}};
    return {demazure_character(ad, {1, lambda, 0}), fd};
  }
  const ShortEmbedding se = short_subdatum(rd);
  const AffineDatum sub = affinize(se.subdatum());
  const auto ch_sh = demazure_character(sub, {1, se.restrict(lambda), 0});
  const auto fd_sh = greedy_decompose(sub, ch_sh, rd.lacing());
  FlagDecomposition fd{rd.label(), 1, {}};
  for (const auto& p : fd_sh.pieces) fd.pieces.push_back({eta_lambda(se, lambda, p.lambda), p.grade, p.mult});
  return {flag_character(ad, fd), fd};
}

struct DimCheck {
  bool ok = false;
  std::int64_t dim = 0;      // dim W^c(lambda)
  std::int64_t product = 0;  // prod_i dim W^c(omega_i)^{lambda(h_i)}
  std::vector<std::int64_t> fundamental_dims;
};

inline DimCheck weyl_dim_product_check(const RootDatum& rd, const Weight& lambda) {
  DimCheck out;
  out.dim = graded_weyl_character(rd, lambda).character.mass();
  out.product = 1;
  for (int i : rd.nodes()) {
    const std::int64_t e = lambda.h[rd.slot(i)];
    const std::int64_t d = graded_weyl_character(rd, rd.fundamental(i)).character.mass();
    out.fundamental_dims.push_back(d);
    for (std::int64_t k = 0; k < e; ++k) out.product *= d;
  }
  out.ok = out.dim == out.product;
  return out;
}

/// Dominant l-weight seen through characters: a list of (lambda_j, a_j) with distinct points a_j.
class DominantLWeight {
 public:
  struct Factor {
    Weight lambda;
    std::string point;
  };

  DominantLWeight() = default;
  explicit DominantLWeight(std::vector<Factor> factors) : factors_(std::move(factors)) {
    std::set<std::string> seen;
    for (const auto& f : factors_)
      if (!seen.insert(f.point).second) throw Error(ErrorKind::InvalidArgument, "repeated point label '" + f.point + "'");
  }

  const std::vector<Factor>& factors() const { return factors_; }
  Weight weight(const RootDatum& rd) const {
    Weight w = rd.zero();
    for (const auto& f : factors_) w += f.lambda;
    return w;
  }

 private:
  std::vector<Factor> factors_;
};

/// ch W(varpi) = prod_j ch W^c(lambda_j), grades forgotten.
inline FormalCharacter local_weyl_character(const RootDatum& rd, const DominantLWeight& varpi) {
  FormalCharacter out(rd.label(), rd.zero());
  for (const auto& f : varpi.factors()) out = out * forget_grading(graded_weyl_character(rd, f.lambda).character);
  return out;
}

}  // namespace demflag
