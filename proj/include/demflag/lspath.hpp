#pragma once

#include "demflag/weyl.hpp"

#include <optional>
#include <ostream>

namespace demflag {

/// Piecewise-linear path pi: [0,1] -> h-hat^*, starting at 0.  Each segment
/// moves with constant velocity `dir` for time `dur`.
///
/// Canonical form has no zero-duration segments and no two consecutive
/// segments with positively proportional directions; equality and ordering
/// compare canonical forms.
class LSPath {
 public:
  struct Segment {
    RationalWeight dir;
    Rational dur;

    friend bool operator==(const Segment&, const Segment&) = default;
    friend bool operator<(const Segment& a, const Segment& b) {
      if (a.dir != b.dir) return a.dir < b.dir;
      return a.dur < b.dur;
    }
  };

  LSPath() = default;
  explicit LSPath(std::vector<Segment> segs) : dim_(segs.empty() ? 0 : segs.front().dir.size()), segs_(std::move(segs)) {
    canonicalize();
  }
  LSPath(std::size_t dim, std::vector<Segment> segs) : dim_(dim), segs_(std::move(segs)) { canonicalize(); }

  static LSPath straight(const Weight& lambda) {
    return LSPath(lambda.size(), {Segment{to_rational(lambda), Rational(1)}});
  }

  const std::vector<Segment>& segments() const { return segs_; }
  std::size_t dim() const { return dim_; }

  RationalWeight endpoint() const {
    RationalWeight e(dim());
    for (const auto& s : segs_) e += s.dur * s.dir;
    return e;
  }

  /// wt(pi) = pi(1); integral for every path in a generated crystal.
  Weight weight() const {
    auto w = to_integral(endpoint());
    if (!w) throw Error(ErrorKind::NonIntegralMin, "path endpoint is not integral");
    return *w;
  }

  /// Values of <pi(t), h> at the breakpoints 0 = t_0 < t_1 < ... < t_k = 1.
  std::vector<Rational> profile(std::size_t slot) const {
    std::vector<Rational> v{Rational(0)};
    for (const auto& s : segs_) v.push_back(v.back() + s.dur * s.dir.h[slot]);
    return v;
  }

  /// Minimum of <pi(t), h>; attained at a breakpoint since the path is piecewise linear.
  Rational min_value(std::size_t slot) const {
    auto v = profile(slot);
    return *std::min_element(v.begin(), v.end());
  }

  friend bool operator==(const LSPath&, const LSPath&) = default;
  friend bool operator<(const LSPath& a, const LSPath& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    return a.segs_ < b.segs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const LSPath& p) {
    os << "[";
    for (std::size_t k = 0; k < p.segs_.size(); ++k) os << (k ? " " : "") << p.segs_[k].dir << "*" << p.segs_[k].dur;
    return os << "]";
  }

 private:
  static bool positively_proportional(const RationalWeight& a, const RationalWeight& b) {
    std::optional<Rational> ratio;
    auto check = [&](const Rational& x, const Rational& y) {
      if (x == 0 || y == 0) return x == y;
      const Rational r = y / x;
      if (!ratio) ratio = r;
      return *ratio == r;
    };
    for (std::size_t k = 0; k < a.size(); ++k)
      if (!check(a.h[k], b.h[k])) return false;
    if (!check(a.d, b.d)) return false;
    return ratio && *ratio > 0;
  }

  void canonicalize() {
    std::vector<Segment> out;
    for (auto& s : segs_) {
      if (s.dur == 0 || s.dir.is_zero()) continue;
      if (!out.empty() && positively_proportional(out.back().dir, s.dir)) {
        Segment& last = out.back();
        RationalWeight disp = last.dur * last.dir + s.dur * s.dir;
        last.dur += s.dur;
        disp *= Rational(1) / last.dur;
        last.dir = std::move(disp);
      } else {
        out.push_back(std::move(s));
      }
    }
    segs_ = std::move(out);
  }

  std::size_t dim_ = 0;
  std::vector<Segment> segs_;
};

/// pi_1 * pi_2: run pi_1 then pi_2 at double speed; weights add.
inline LSPath concat_paths(const LSPath& a, const LSPath& b) {
  std::vector<LSPath::Segment> segs;
  for (const auto* p : {&a, &b})
    for (const auto& s : p->segments()) segs.push_back({Rational(2) * s.dir, s.dur / 2});
  return LSPath(std::max(a.dim(), b.dim()), std::move(segs));
}

namespace detail {

template <WeylDatum D>
LSPath::Segment reflect_segment(const D& datum, int node, const LSPath::Segment& s) {
  return {reflect_weight(datum, node, s.dir), s.dur};
}

}  // namespace detail

/// Littelmann lowering operator; nullopt when phi_i(pi) = 0.
template <WeylDatum D>
std::optional<LSPath> root_op_f(const D& datum, int node, const LSPath& pi) {
  const std::size_t k = datum.slot(node);
  const auto& segs = pi.segments();
  const auto H = pi.profile(k);
  const Rational m = *std::min_element(H.begin(), H.end());
  if (H.back() - m < 1) return std::nullopt;

  std::size_t k0 = 0;  // last breakpoint where the minimum is attained
  for (std::size_t j = 0; j < H.size(); ++j)
    if (H[j] == m) k0 = j;

  std::vector<LSPath::Segment> out(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(k0));
  for (std::size_t j = k0; j < segs.size(); ++j) {
    if (H[j + 1] < m + 1) {
      out.push_back(detail::reflect_segment(datum, node, segs[j]));
      continue;
    }
    // first hit of m+1 inside segment j
    const Rational tau = (m + 1 - H[j]) / segs[j].dir.h[k];
    out.push_back(detail::reflect_segment(datum, node, {segs[j].dir, tau}));
    out.push_back({segs[j].dir, segs[j].dur - tau});
    out.insert(out.end(), segs.begin() + static_cast<std::ptrdiff_t>(j + 1), segs.end());
    break;
  }
  return LSPath(pi.dim(), std::move(out));
}

/// Littelmann raising operator; nullopt when epsilon_i(pi) = 0.
template <WeylDatum D>
std::optional<LSPath> root_op_e(const D& datum, int node, const LSPath& pi) {
  const std::size_t k = datum.slot(node);
  const auto& segs = pi.segments();
  const auto H = pi.profile(k);
  const Rational m = *std::min_element(H.begin(), H.end());
  if (m > -1) return std::nullopt;

  std::size_t k1 = 0;  // first breakpoint where the minimum is attained
  while (H[k1] != m) ++k1;

  // walk back from k1 to the last time the value was m+1
  std::size_t j = k1;
  while (j > 0 && H[j - 1] < m + 1) --j;
  // segment j-1 starts at or above m+1 (j >= 1 because H[0] = 0 >= m+1)
  const std::size_t cross = j - 1;
  const auto& s = segs[cross];
  const Rational tau = (m + 1 - H[cross]) / s.dir.h[k];

  std::vector<LSPath::Segment> out(segs.begin(), segs.begin() + static_cast<std::ptrdiff_t>(cross));
  out.push_back({s.dir, tau});
  out.push_back(detail::reflect_segment(datum, node, {s.dir, s.dur - tau}));
  for (std::size_t q = cross + 1; q < k1; ++q) out.push_back(detail::reflect_segment(datum, node, segs[q]));
  out.insert(out.end(), segs.begin() + static_cast<std::ptrdiff_t>(k1), segs.end());
  return LSPath(pi.dim(), std::move(out));
}

struct EpsPhi {
  std::int64_t eps = 0;
  std::int64_t phi = 0;
  friend bool operator==(const EpsPhi&, const EpsPhi&) = default;
};

template <WeylDatum D>
EpsPhi eps_phi(const D& datum, int node, const LSPath& pi) {
  const auto H = pi.profile(datum.slot(node));
  const Rational m = *std::min_element(H.begin(), H.end());
  if (!is_integral(m)) throw Error(ErrorKind::NonIntegralMin, "minimum of h-profile is not an integer");
  const Rational top = H.back() - m;
  if (!is_integral(top)) throw Error(ErrorKind::NonIntegralMin, "endpoint value is not an integer");
  return {-m.numerator(), top.numerator()};
}

}  // namespace demflag
