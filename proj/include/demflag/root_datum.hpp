#pragma once

#include "demflag/error.hpp"
#include "demflag/rational.hpp"
#include "demflag/weight.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace demflag {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Finite-type root datum with Bourbaki node numbering 1..n.
///
/// The Cartan matrix is stored with c(i, j) = alpha_j(h_i).  Positive roots are
/// kept in simple-root coordinates.  Marks are indexed by node with slot 0
/// holding the affine node, so a_0 = a^vee_0 = 1.
class RootDatum {
 public:
  RootDatum() = default;

  char series() const { return series_; }
  int rank() const { return rank_; }
  const std::string& label() const { return label_; }

  // --- Weyl datum interface (shared with AffineDatum) ---
  std::size_t dim() const { return static_cast<std::size_t>(rank_); }
  bool is_affine() const { return false; }
  std::vector<int> nodes() const {
    std::vector<int> v(rank_);
    std::iota(v.begin(), v.end(), 1);
    return v;
  }
  std::size_t slot(int node) const {
    if (node < 1 || node > rank_)
      throw Error(ErrorKind::IndexOutOfRange, "node " + std::to_string(node) + " not in I for " + label_);
    return static_cast<std::size_t>(node - 1);
  }
  const Weight& simple_root(int node) const { return simple_roots_[slot(node)]; }

  /// c_ij = alpha_j(h_i) for nodes i, j.
  std::int64_t cartan(int i, int j) const { return cartan_[slot(i)][slot(j)]; }
  const IntMatrix& cartan_matrix() const { return cartan_; }

  const std::vector<std::vector<std::int64_t>>& positive_roots() const { return positive_roots_; }
  const std::vector<std::int64_t>& theta_coords() const { return theta_coords_; }
  const Weight& theta() const { return theta_; }
  int lacing() const { return lacing_; }
  bool simply_laced() const { return lacing_ == 1; }
  /// r^vee_{alpha_i}: 1 for long simple roots, the lacing number for short ones.
  int root_lacing(int node) const { return root_lacing_[slot(node)]; }
  bool is_short(int node) const { return root_lacing(node) != 1; }
  std::vector<int> short_nodes() const {
    std::vector<int> v;
    for (int i = 1; i <= rank_; ++i)
      if (is_short(i)) v.push_back(i);
    return v;
  }
  /// a_i, node 0 included.
  const std::vector<std::int64_t>& marks() const { return marks_; }
  /// a^vee_i, node 0 included; h_theta = sum_{i in I} a^vee_i h_i.
  const std::vector<std::int64_t>& dual_marks() const { return dual_marks_; }
  const WeylWord& longest_word() const { return w0_; }

  Weight zero() const { return Weight(dim()); }
  Weight fundamental(int node) const {
    Weight w(dim());
    w.h[slot(node)] = 1;
    return w;
  }
  Weight rho() const {
    Weight w(dim());
    std::fill(w.h.begin(), w.h.end(), 1);
    return w;
  }
  Weight weight(std::vector<std::int64_t> hv) const {
    if (hv.size() != dim())
      throw Error(ErrorKind::IndexOutOfRange,
                  "weight for " + label_ + " needs " + std::to_string(dim()) + " h-values");
    return Weight(std::move(hv), 0);
  }

  bool is_dominant(const Weight& w) const {
    return std::all_of(w.h.begin(), w.h.end(), [](auto x) { return x >= 0; });
  }

  /// Coordinates of w in the basis of simple roots, solved exactly.
  std::vector<Rational> root_coordinates(const Weight& w) const {
    auto x = solve_exact(cartan_, w.h);
    // finite-type Cartan matrices are nonsingular
    return *x;
  }

  friend bool operator==(const RootDatum& a, const RootDatum& b) { return a.label_ == b.label_; }

  friend RootDatum build_finite_datum(char series, int rank);

 private:
  void finish();

  char series_ = 'A';
  int rank_ = 0;
  std::string label_;
  IntMatrix cartan_;
  std::vector<Weight> simple_roots_;
  std::vector<std::vector<std::int64_t>> positive_roots_;
  std::vector<std::int64_t> theta_coords_;
  Weight theta_;
  int lacing_ = 1;
  std::vector<int> root_lacing_;
  std::vector<std::int64_t> marks_;
  std::vector<std::int64_t> dual_marks_;
  WeylWord w0_;
};

namespace detail {

inline IntMatrix cartan_for(char series, int n) {
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple edge
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  switch (series) {
    case 'A':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 1; i < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(i, i + 1);
      link(n - 2, n);
      break;
    case 'E':
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (int i = 4; i < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(1, 2);
      link(2, 3);
      link(3, 4);
      c[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      // alpha_1 short
      c[0][1] = -3;
      c[1][0] = -1;
      break;
    default:
      break;
  }
  return c;
}

inline bool valid_type(char series, int n) {
  if (n < 1 || n > 8) return false;
  switch (series) {
    case 'A': return true;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 4;
    case 'E': return n >= 6;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

}  // namespace detail

inline void RootDatum::finish() {
  const int n = rank_;
  simple_roots_.clear();
  for (int j = 0; j < n; ++j) {
    Weight a(n);
    for (int i = 0; i < n; ++i) a.h[i] = cartan_[i][j];
    simple_roots_.push_back(a);
  }

  // relative squared lengths from (a_i,a_i) c_ij = (a_j,a_j) c_ji
  std::vector<Rational> len(n, Rational(0));
  len[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan_[i][j] == 0 || len[j] != 0) continue;
      len[j] = len[i] * Rational(cartan_[i][j], cartan_[j][i]);
      stack.push_back(j);
    }
  }
  const Rational longest = *std::max_element(len.begin(), len.end());
  root_lacing_.assign(n, 1);
  lacing_ = 1;
  for (int i = 0; i < n; ++i) {
    Rational r = longest / len[i];
    root_lacing_[i] = static_cast<int>(r.numerator());
    lacing_ = std::max(lacing_, root_lacing_[i]);
  }

  // positive roots by height
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    seen.insert(e);
  }
  positive_roots_ = layer;
  while (!layer.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        std::int64_t p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[i][j];
        if (p - pairing > 0) {
          auto up = beta;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    positive_roots_.insert(positive_roots_.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  theta_coords_ = positive_roots_.back();
  theta_ = Weight(n);
  for (int j = 0; j < n; ++j) theta_ += theta_coords_[j] * simple_roots_[j];

  marks_.assign(n + 1, 1);
  dual_marks_.assign(n + 1, 1);
  for (int i = 0; i < n; ++i) {
    marks_[i + 1] = theta_coords_[i];
    dual_marks_[i + 1] = theta_coords_[i] / root_lacing_[i];
  }

  // w0 from the greedy reduction of -rho
  Weight mu = -rho();
  w0_ = WeylWord{};
  for (;;) {
    int neg = -1;
    for (int i = 0; i < n; ++i)
      if (mu.h[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    mu -= mu.h[neg] * simple_roots_[neg];
    w0_.letters.push_back(neg + 1);
  }
}

/// Builds the finite datum of the given series and rank (rank at most 8).
inline RootDatum build_finite_datum(char series, int rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  if (!detail::valid_type(series, rank))
    throw Error(ErrorKind::UnknownType, std::string(1, series) + std::to_string(rank) + " is not a supported finite type");
  RootDatum rd;
  rd.series_ = series;
  rd.rank_ = rank;
  rd.label_ = std::string(1, series) + std::to_string(rank);
  rd.cartan_ = detail::cartan_for(series, rank);
  rd.finish();
  return rd;
}

/// Parses labels such as "A1", "c2", "G2".
inline RootDatum parse_datum(const std::string& label) {
  if (label.size() < 2 || !std::isalpha(static_cast<unsigned char>(label[0])))
    throw Error(ErrorKind::UnknownType, "bad type label '" + label + "'");
  int rank = 0;
  for (std::size_t k = 1; k < label.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(label[k])))
      throw Error(ErrorKind::UnknownType, "bad type label '" + label + "'");
    rank = rank * 10 + (label[k] - '0');
    if (rank > 99) throw Error(ErrorKind::UnknownType, "bad type label '" + label + "'");
  }
  return build_finite_datum(label[0], rank);
}

}  // namespace demflag
