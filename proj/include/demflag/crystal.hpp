#pragma once

#include "demflag/character.hpp"
#include "demflag/lspath.hpp"

#include <set>
#include <sstream>

namespace demflag {

/// A finite set of paths in canonical form, generated from b_Lambda along a word.
struct PathSet {
  std::string datum;
  Weight highest;
  WeylWord word;
  std::set<LSPath> paths;

  std::size_t size() const { return paths.size(); }
  bool contains(const LSPath& p) const { return paths.count(p) != 0; }
};

template <WeylDatum D>
LSPath straight_path(const D& datum, const Weight& lambda) {
  if (lambda.size() != datum.dim()) throw Error(ErrorKind::IndexOutOfRange, "weight has the wrong size");
  for (int i : datum.nodes())
    if (lambda.h[datum.slot(i)] < 0) throw Error(ErrorKind::NotDominant, "straight_path needs a dominant weight");
  return LSPath::straight(lambda);
}

/// B^w(Lambda) = { f_{i_1}^{m_1} ... f_{i_n}^{m_n} b_Lambda }, letters consumed right to left.
template <WeylDatum D>
PathSet generate_demazure_set(const D& datum, const Weight& lambda, const WeylWord& w) {
  check_word(datum, w);
  PathSet ps{datum.label(), lambda, w, {straight_path(datum, lambda)}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    std::set<LSPath> next;
    for (const auto& p : ps.paths) {
      std::optional<LSPath> cur = p;
      while (cur) {
        next.insert(*cur);
        cur = root_op_f(datum, *it, *cur);
      }
    }
    ps.paths = std::move(next);
  }
  return ps;
}

inline FormalCharacter crystal_character(const PathSet& ps) {
  FormalCharacter f(ps.datum);
  for (const auto& p : ps.paths) f.add(p.weight(), 1);
  return f;
}

struct HighestElement {
  LSPath path;  // the element b of the Demazure set
  Weight nu;    // mu + wt(b)
};

/// Elements b of B^w(Lambda) such that b_mu (x) b is killed by every e_i, with
/// the tensor realized as the concatenation pi_mu * pi_b.
template <WeylDatum D>
std::vector<HighestElement> joseph_highest(const D& datum, const Weight& mu, const Weight& lambda,
                                           const WeylWord& w) {
  const LSPath head = straight_path(datum, mu);
  const PathSet ps = generate_demazure_set(datum, lambda, w);
  std::vector<HighestElement> out;
  for (const auto& b : ps.paths) {
    const LSPath joined = concat_paths(head, b);
    bool highest = true;
    for (int i : datum.nodes())
      if (joined.min_value(datum.slot(i)) != 0) {
        highest = false;
        break;
      }
    if (highest) out.push_back({b, mu + b.weight()});
  }
  return out;
}

/// Pointwise form of the same test: eps_i(b) <= mu(h_i) for every i.
template <WeylDatum D>
bool joseph_criterion(const D& datum, const Weight& mu, const LSPath& b) {
  for (int i : datum.nodes())
    if (eps_phi(datum, i, b).eps > mu.h[datum.slot(i)]) return false;
  return true;
}

/// f-edges of a path set as "source node target" lines; ids follow set order.
template <WeylDatum D>
std::string export_graph(const D& datum, const PathSet& ps) {
  std::map<LSPath, std::size_t> id;
  for (const auto& p : ps.paths) id.emplace(p, id.size());
  std::ostringstream os;
  for (const auto& [p, src] : id)
    for (int i : datum.nodes()) {
      auto q = root_op_f(datum, i, p);
      if (!q) continue;
      auto it = id.find(*q);
      if (it != id.end()) os << src << ' ' << i << ' ' << it->second << '\n';
    }
  return os.str();
}

}  // namespace demflag
