#pragma once

#include "demflag/affine_datum.hpp"

#include <concepts>
#include <utility>

namespace demflag {

/// Anything with simple roots indexed by node labels: RootDatum or AffineDatum.
template <class D>
concept WeylDatum = requires(const D& d, int node) {
  { d.dim() } -> std::convertible_to<std::size_t>;
  { d.slot(node) } -> std::convertible_to<std::size_t>;
  { d.simple_root(node) } -> std::convertible_to<const Weight&>;
  { d.nodes() } -> std::convertible_to<std::vector<int>>;
  { d.label() } -> std::convertible_to<std::string>;
  { d.is_affine() } -> std::convertible_to<bool>;
};

/// s_i(mu) = mu - mu(h_i) alpha_i; the grade moves with alpha_i(d).
template <WeylDatum D, class T>
BasicWeight<T> reflect_weight(const D& datum, int node, BasicWeight<T> mu) {
  const std::size_t k = datum.slot(node);
  const T n = mu.h[k];
  if (n == T(0)) return mu;
  const Weight& a = datum.simple_root(node);
  for (std::size_t j = 0; j < mu.h.size(); ++j) mu.h[j] -= n * T(a.h[j]);
  mu.d -= n * T(a.d);
  return mu;
}

/// s_{i_1}(s_{i_2}(... s_{i_n}(mu))): the last letter acts first.
template <WeylDatum D, class T>
BasicWeight<T> apply_word(const D& datum, const WeylWord& w, BasicWeight<T> mu) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) mu = reflect_weight(datum, *it, std::move(mu));
  return mu;
}

template <WeylDatum D>
void check_word(const D& datum, const WeylWord& w) {
  for (int i : w.letters) (void)datum.slot(i);
}

enum class TieBreak { SmallestFirst, LargestFirst };

/// Greedy reduction to the dominant chamber.  Returns (Lambda, w) with
/// apply_word(w, Lambda) == mu.  Affine weights must have positive level.
template <WeylDatum D>
std::pair<Weight, WeylWord> make_dominant(const D& datum, Weight mu, TieBreak order = TieBreak::SmallestFirst) {
  if constexpr (std::same_as<D, AffineDatum>) {
    if (datum.level(mu) <= 0)
      throw Error(ErrorKind::ZeroLevel, "make_dominant needs positive level, got " + std::to_string(datum.level(mu)));
  }
  const auto nodes = datum.nodes();
  WeylWord w;
  for (;;) {
    int pick = -1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const std::size_t idx = order == TieBreak::SmallestFirst ? k : nodes.size() - 1 - k;
      if (mu.h[datum.slot(nodes[idx])] < 0) {
        pick = nodes[idx];
        break;
      }
    }
    if (pick < 0) break;
    mu = reflect_weight(datum, pick, std::move(mu));
    w.letters.push_back(pick);
  }
  return {mu, w};
}

/// mu <= lambda in the dominance order of a finite datum.
inline bool dominance_leq(const RootDatum& rd, const Weight& mu, const Weight& lambda) {
  const auto n = rd.root_coordinates(lambda - mu);
  return std::all_of(n.begin(), n.end(), [](const Rational& q) { return is_integral(q) && q >= 0; });
}

/// mu <= lambda in the affine root order: lambda - mu in the positive span of alpha_i, i in I-hat.
inline bool affine_leq(const AffineDatum& ad, const Weight& mu, const Weight& lambda) {
  const auto n = ad.root_coordinates(lambda - mu);
  if (!n) return false;
  return std::all_of(n->begin(), n->end(), [](const Rational& q) { return is_integral(q) && q >= 0; });
}

inline Weight apply_w0(const RootDatum& rd, const Weight& lambda) { return apply_word(rd, rd.longest_word(), lambda); }

}  // namespace demflag
