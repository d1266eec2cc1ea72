#pragma once

#include "demflag/rational.hpp"

#include <compare>
#include <cstdint>
#include <ostream>
#include <vector>

namespace demflag {

/// A weight recorded by its values on the Chevalley coweights h_i (one slot per
/// node, in node order) and on the degree element d.  Finite-type weights keep
/// grade zero throughout.
template <class T>
struct BasicWeight {
  std::vector<T> h;
  T d{};

  BasicWeight() = default;
  explicit BasicWeight(std::size_t n) : h(n), d{} {}
  BasicWeight(std::vector<T> hv, T dv) : h(std::move(hv)), d(dv) {}

  std::size_t size() const { return h.size(); }

  BasicWeight& operator+=(const BasicWeight& o) {
    for (std::size_t k = 0; k < h.size(); ++k) h[k] += o.h[k];
    d += o.d;
    return *this;
  }
  BasicWeight& operator-=(const BasicWeight& o) {
    for (std::size_t k = 0; k < h.size(); ++k) h[k] -= o.h[k];
    d -= o.d;
    return *this;
  }
  BasicWeight& operator*=(const T& c) {
    for (auto& x : h) x *= c;
    d *= c;
    return *this;
  }

  friend BasicWeight operator+(BasicWeight a, const BasicWeight& b) { return a += b; }
  friend BasicWeight operator-(BasicWeight a, const BasicWeight& b) { return a -= b; }
  friend BasicWeight operator*(const T& c, BasicWeight a) { return a *= c; }
  friend BasicWeight operator-(BasicWeight a) { return a *= T(-1); }

  friend bool operator==(const BasicWeight&, const BasicWeight&) = default;
  friend bool operator<(const BasicWeight& a, const BasicWeight& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.d < b.d;
  }

  bool is_zero() const {
    for (const auto& x : h)
      if (x != T(0)) return false;
    return d == T(0);
  }
};

using Weight = BasicWeight<std::int64_t>;
using RationalWeight = BasicWeight<Rational>;

inline RationalWeight to_rational(const Weight& w) {
  RationalWeight r(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) r.h[k] = w.h[k];
  r.d = w.d;
  return r;
}

/// Integral weight if every coordinate has denominator one.
inline std::optional<Weight> to_integral(const RationalWeight& r) {
  Weight w(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (!is_integral(r.h[k])) return std::nullopt;
    w.h[k] = r.h[k].numerator();
  }
  if (!is_integral(r.d)) return std::nullopt;
  w.d = r.d.numerator();
  return w;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const BasicWeight<T>& w) {
  os << "(h:[";
  for (std::size_t k = 0; k < w.h.size(); ++k) os << (k ? "," : "") << w.h[k];
  return os << "],d:" << w.d << ")";
}

/// Reduced or unreduced sequence of node labels; apply_word composes right to left.
struct WeylWord {
  std::vector<int> letters;

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  WeylWord reversed() const { return WeylWord{{letters.rbegin(), letters.rend()}}; }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
  friend auto operator<=>(const WeylWord&, const WeylWord&) = default;
};

}  // namespace demflag
