#pragma once

#include "demflag/root_datum.hpp"

namespace demflag {

/// Untwisted affinization of a finite datum.  Weights carry one h-value per
/// node 0..n (slot k holds node k) and the grade mu(d).
class AffineDatum {
 public:
  AffineDatum() = default;
  explicit AffineDatum(RootDatum rd) : finite_(std::move(rd)) {
    const int n = finite_.rank();
    label_ = finite_.label() + "^(1)";
    // alpha_j for j in I: finite values, alpha_j(h_0) = -alpha_j(h_theta)
    simple_roots_.assign(n + 1, Weight(n + 1));
    for (int j = 1; j <= n; ++j) {
      Weight a(n + 1);
      std::int64_t on_theta = 0;
      for (int i = 1; i <= n; ++i) {
        a.h[i] = finite_.cartan(i, j);
        on_theta += finite_.dual_marks()[i] * a.h[i];
      }
      a.h[0] = -on_theta;
      simple_roots_[j] = a;
    }
    // alpha_0 = delta - theta
    simple_roots_[0] = delta() - embed_classical(finite_.theta());
  }

  const RootDatum& finite() const { return finite_; }
  const std::string& label() const { return label_; }
  int rank() const { return finite_.rank(); }

  // --- Weyl datum interface ---
  std::size_t dim() const { return static_cast<std::size_t>(finite_.rank()) + 1; }
  bool is_affine() const { return true; }
  std::vector<int> nodes() const {
    std::vector<int> v(dim());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }
  std::size_t slot(int node) const {
    if (node < 0 || node > finite_.rank())
      throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(node) + " not in I-hat for " + label_);
    return static_cast<std::size_t>(node);
  }
  const Weight& simple_root(int node) const { return simple_roots_[slot(node)]; }

  /// Extended Cartan matrix entry alpha_j(h_i), i, j in I-hat.
  std::int64_t cartan(int i, int j) const { return simple_root(j).h[slot(i)]; }
  IntMatrix cartan_matrix() const {
    IntMatrix c(dim(), std::vector<std::int64_t>(dim()));
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) c[i][j] = simple_roots_[j].h[i];
    return c;
  }

  /// mu(c) = sum a^vee_i mu(h_i), a^vee_0 = 1.
  std::int64_t level(const Weight& mu) const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < dim(); ++k) s += finite_.dual_marks()[k] * mu.h[k];
    return s;
  }

  Weight delta() const {
    Weight w(dim());
    w.d = 1;
    return w;
  }
  Weight fundamental(int node) const {
    Weight w(dim());
    w.h[slot(node)] = 1;
    return w;
  }
  Weight zero() const { return Weight(dim()); }

  /// lambda in P sits in P-hat with lambda(h_0) = -lambda(h_theta), level 0, grade 0.
  Weight embed_classical(const Weight& lambda) const {
    Weight w(dim());
    std::int64_t on_theta = 0;
    for (int i = 1; i <= finite_.rank(); ++i) {
      w.h[i] = lambda.h[i - 1];
      on_theta += finite_.dual_marks()[i] * lambda.h[i - 1];
    }
    w.h[0] = -on_theta;
    return w;
  }

  /// Drops h_0: the classical part of mu (its grade is not part of the result).
  Weight restrict_classical(const Weight& mu) const {
    Weight w(finite_.dim());
    for (std::size_t k = 1; k < dim(); ++k) w.h[k - 1] = mu.h[k];
    return w;
  }

  bool is_dominant(const Weight& w) const {
    return std::all_of(w.h.begin(), w.h.end(), [](auto x) { return x >= 0; });
  }

  /// Coordinates n_i (i in I-hat) with mu = sum n_i alpha_i, when mu has level 0.
  std::optional<std::vector<Rational>> root_coordinates(const Weight& mu) const {
    if (level(mu) != 0) return std::nullopt;
    // only alpha_0 has a grade component; a level-0, grade-0 weight is the
    // classical embedding of its restriction
    const std::int64_t n0 = mu.d;
    Weight rest = mu - n0 * simple_roots_[0];
    std::vector<Rational> out(dim());
    out[0] = n0;
    auto fin = finite_.root_coordinates(restrict_classical(rest));
    for (std::size_t k = 0; k < fin.size(); ++k) out[k + 1] = fin[k];
    return out;
  }

  friend bool operator==(const AffineDatum& a, const AffineDatum& b) { return a.label_ == b.label_; }

 private:
  RootDatum finite_;
  std::string label_;
  std::vector<Weight> simple_roots_;
};

inline AffineDatum affinize(const RootDatum& rd) { return AffineDatum(rd); }

}  // namespace demflag
