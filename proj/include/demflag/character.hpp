#pragma once

#include "demflag/error.hpp"
#include "demflag/weight.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace demflag {

/// Finite integer combination of e^mu over one datum.  Zero coefficients are
/// never stored, so equality is plain map equality.
class FormalCharacter {
 public:
  using Map = std::map<Weight, std::int64_t>;

  FormalCharacter() = default;
  explicit FormalCharacter(std::string datum) : datum_(std::move(datum)) {}
  FormalCharacter(std::string datum, const Weight& mu, std::int64_t c = 1) : datum_(std::move(datum)) { add(mu, c); }

  const std::string& datum() const { return datum_; }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::int64_t coeff(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Weight& mu, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(mu, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Sum of coefficients (the dimension for a module character).
  std::int64_t mass() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  FormalCharacter& operator+=(const FormalCharacter& o) {
    same_datum(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  FormalCharacter& operator-=(const FormalCharacter& o) {
    same_datum(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  FormalCharacter& operator*=(std::int64_t k) {
    if (k == 0) terms_.clear();
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(std::int64_t k, FormalCharacter a) { return a *= k; }

  /// e^mu e^nu = e^{mu+nu}.
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
    a.same_datum(b);
    FormalCharacter out(a.datum_);
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) out.add(wa + wb, ca * cb);
    return out;
  }

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  void same_datum(const FormalCharacter& o) const {
    if (o.datum_ != datum_) throw Error(ErrorKind::DatumMismatch, "characters over " + datum_ + " and " + o.datum_);
  }

  std::string datum_;
  Map terms_;
};

/// Classical weight together with a grade; orders by (grade, h-values).
struct GradedWeight {
  std::int64_t grade = 0;
  std::vector<std::int64_t> h;

  friend auto operator<=>(const GradedWeight&, const GradedWeight&) = default;
  friend bool operator==(const GradedWeight&, const GradedWeight&) = default;
};

/// Finite map (classical weight, grade) -> nonzero integer, over a finite datum.
class GradedClassicalCharacter {
 public:
  using Map = std::map<GradedWeight, std::int64_t>;

  GradedClassicalCharacter() = default;
  explicit GradedClassicalCharacter(std::string datum) : datum_(std::move(datum)) {}

  const std::string& datum() const { return datum_; }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  std::int64_t coeff(const Weight& lambda, std::int64_t grade) const {
    auto it = terms_.find(GradedWeight{grade, lambda.h});
    return it == terms_.end() ? 0 : it->second;
  }

  void add(const Weight& lambda, std::int64_t grade, std::int64_t c) { add(GradedWeight{grade, lambda.h}, c); }
  void add(const GradedWeight& key, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t mass() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }
  std::int64_t min_grade() const { return terms_.empty() ? 0 : terms_.begin()->first.grade; }

  GradedClassicalCharacter& operator+=(const GradedClassicalCharacter& o) {
    same_datum(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  GradedClassicalCharacter& operator-=(const GradedClassicalCharacter& o) {
    same_datum(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  GradedClassicalCharacter& operator*=(std::int64_t k) {
    if (k == 0) terms_.clear();
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }
  friend GradedClassicalCharacter operator+(GradedClassicalCharacter a, const GradedClassicalCharacter& b) {
    return a += b;
  }
  friend GradedClassicalCharacter operator-(GradedClassicalCharacter a, const GradedClassicalCharacter& b) {
    return a -= b;
  }
  friend GradedClassicalCharacter operator*(std::int64_t k, GradedClassicalCharacter a) { return a *= k; }
  friend bool operator==(const GradedClassicalCharacter&, const GradedClassicalCharacter&) = default;

 private:
  void same_datum(const GradedClassicalCharacter& o) const {
    if (o.datum_ != datum_) throw Error(ErrorKind::DatumMismatch, "characters over " + datum_ + " and " + o.datum_);
  }

  std::string datum_;
  Map terms_;
};

}  // namespace demflag
