#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace demflag {

/// Exact rational with int64 numerator and positive denominator, always in
/// lowest terms.  Intermediate products go through 128 bits and overflow throws.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : Rational(normalize(n, d)) {}

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rational& operator+=(const Rational& o) { return *this = make(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_); }
  Rational& operator-=(const Rational& o) { return *this = make(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_); }
  Rational& operator*=(const Rational& o) { return *this = make(wide(num_) * o.num_, wide(den_) * o.den_); }
  Rational& operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return *this = make(wide(num_) * o.den_, wide(den_) * o.num_);
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return make(-wide(a.num_), a.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return wide(a.num_) * b.den_ <=> wide(b.num_) * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) {
    os << q.num_;
    if (q.den_ != 1) os << '/' << q.den_;
    return os;
  }

 private:
  using Wide = __int128;
  static Wide wide(std::int64_t x) { return static_cast<Wide>(x); }

  static Rational make(Wide n, Wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Wide a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      Wide t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr Wide lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }
  static Rational normalize(std::int64_t n, std::int64_t d) { return make(n, d); }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline bool is_integral(const Rational& q) { return q.denominator() == 1; }

/// Solves A x = b exactly. A is square; returns nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<std::int64_t>>& a,
                                                        const std::vector<std::int64_t>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n] = b[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace demflag
