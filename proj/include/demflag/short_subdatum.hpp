#pragma once

#include "demflag/weyl.hpp"

namespace demflag {

/// The simply-laced subdatum spanned by the short simple roots, with the
/// restriction lambda -> lambda-bar and the section i_sh.  Subdatum node k
/// (1-based) corresponds to the k-th short node of the parent in increasing order.
class ShortEmbedding {
 public:
  ShortEmbedding(const RootDatum& parent, std::vector<int> short_nodes)
      : parent_(parent), short_nodes_(std::move(short_nodes)),
        sub_(build_finite_datum('A', static_cast<int>(short_nodes_.size()))) {}

  const RootDatum& parent() const { return parent_; }
  const RootDatum& subdatum() const { return sub_; }
  const std::vector<int>& short_nodes() const { return short_nodes_; }

  /// lambda-bar: keep the h-values on short nodes.
  Weight restrict(const Weight& lambda) const {
    Weight w(short_nodes_.size());
    for (std::size_t k = 0; k < short_nodes_.size(); ++k) w.h[k] = lambda.h[parent_.slot(short_nodes_[k])];
    return w;
  }

  /// i_sh on the subdatum root lattice: sum n_k alpha-bar_k -> sum n_k alpha_{short_k}.
  Weight section(const std::vector<std::int64_t>& root_coords) const {
    Weight w = parent_.zero();
    for (std::size_t k = 0; k < short_nodes_.size(); ++k) w += root_coords[k] * parent_.simple_root(short_nodes_[k]);
    return w;
  }

  /// i_sh applied to a subdatum weight lying in its root lattice.
  Weight section(const Weight& mu) const {
    auto q = sub_.root_coordinates(mu);
    std::vector<std::int64_t> n(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) {
      if (!is_integral(q[k])) throw Error(ErrorKind::NotBelow, "weight is not in the short root lattice");
      n[k] = q[k].numerator();
    }
    return section(n);
  }

 private:
  RootDatum parent_;
  std::vector<int> short_nodes_;
  RootDatum sub_;
};

inline ShortEmbedding short_subdatum(const RootDatum& rd) {
  if (rd.simply_laced()) throw Error(ErrorKind::SimplyLaced, rd.label() + " has no short simple roots");
  ShortEmbedding se(rd, rd.short_nodes());
  // the restricted Cartan matrix must be the type A one we built
  const auto& sn = se.short_nodes();
  for (std::size_t a = 0; a < sn.size(); ++a)
    for (std::size_t b = 0; b < sn.size(); ++b)
      if (rd.cartan(sn[a], sn[b]) != se.subdatum().cartan_matrix()[a][b])
        throw Error(ErrorKind::UnknownType, "short subdatum of " + rd.label() + " is not of type A in node order");
  return se;
}

/// eta_lambda(mu) = lambda - sum m_i alpha_i where mu = lambda-bar - sum m_i alpha-bar_i.
inline Weight eta_lambda(const ShortEmbedding& se, const Weight& lambda, const Weight& mu) {
  const RootDatum& sub = se.subdatum();
  const Weight bar = se.restrict(lambda);
  if (!dominance_leq(sub, mu, bar)) throw Error(ErrorKind::NotBelow, "mu is not below the restriction of lambda");
  return lambda - se.section(bar - mu);
}

}  // namespace demflag
