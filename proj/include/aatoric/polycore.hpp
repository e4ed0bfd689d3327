/**
 * @file polycore.hpp
 * @brief Exponent-vector monomials, monic binomials, and the two weighted
 *        grevlex monomial orders (ascending x0<...<xn, descending x0>...>xn).
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aatoric/common.hpp"

namespace aatoric {

/// Monomial in K[x0..xn] as a vector of n+1 nonnegative exponents.
class monomial {
 public:
  monomial() = default;

  explicit monomial(std::vector<Int> exponents) : exps_(std::move(exponents)) {
    for (Int e : exps_)
      if (e < 0) throw error("monomial exponents must be nonnegative");
  }

  static monomial one(std::size_t nvars) {
    return monomial(std::vector<Int>(nvars, 0));
  }

  static monomial variable(std::size_t i, std::size_t nvars, Int power = 1) {
    std::vector<Int> e(nvars, 0);
    e.at(i) = power;
    return monomial(std::move(e));
  }

  std::size_t nvars() const { return exps_.size(); }
  Int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Int>& exponents() const { return exps_; }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Int e) { return e == 0; });
  }

  monomial operator*(const monomial& other) const {
    check_dim(other);
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = checked_add(exps_[i], other.exps_[i]);
    return monomial(std::move(e));
  }

  /// True iff this divides other componentwise.
  bool divides(const monomial& other) const {
    check_dim(other);
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Quotient this / divisor; divisor must divide this.
  monomial operator/(const monomial& divisor) const {
    check_dim(divisor);
    std::vector<Int> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = exps_[i] - divisor.exps_[i];
      if (e[i] < 0) throw error("monomial division with nondividing divisor");
    }
    return monomial(std::move(e));
  }

  friend monomial lcm(const monomial& a, const monomial& b) {
    a.check_dim(b);
    std::vector<Int> e(a.exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = std::max(a.exps_[i], b.exps_[i]);
    return monomial(std::move(e));
  }

  friend bool operator==(const monomial& a, const monomial& b) {
    return a.exps_ == b.exps_;
  }
  friend bool operator!=(const monomial& a, const monomial& b) {
    return !(a == b);
  }

  /// Plain lexicographic comparison of exponent vectors (not a monomial
  /// order; used for canonical tie-breaking in reports).
  friend bool lex_less(const monomial& a, const monomial& b) {
    return a.exps_ < b.exps_;
  }

  /// Renders as "x0^2*x2^2"; exponent 1 elides "^1"; the constant is "1".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x';
      out += std::to_string(i);
      if (exps_[i] != 1) {
        out += '^';
        out += std::to_string(exps_[i]);
      }
    }
    return out.empty() ? "1" : out;
  }

 private:
  void check_dim(const monomial& other) const {
    if (exps_.size() != other.exps_.size())
      throw error("monomial dimension mismatch");
  }

  std::vector<Int> exps_;
};

/// η-exponent of a monomial: sum of exponent[i] * weights[i].
inline Int weighted_degree(const monomial& m, const std::vector<Int>& weights) {
  if (m.nvars() != weights.size()) throw error("weight dimension mismatch");
  Int d = 0;
  for (std::size_t i = 0; i < weights.size(); ++i)
    d = checked_add(d, checked_mul(m[i], weights[i]));
  return d;
}

enum class variable_convention { ascending, descending };

/// Weighted grevlex order determined by the weight vector wt(x_i)=m_i and
/// the variable convention.
///
/// Both rules compare weighted degrees first.  Tie-breaks:
///  - ascending (x0<...<xn): at the smallest index with differing exponents,
///    the smaller exponent wins.
///  - descending (x0>...>xn): at the largest index in [1,n] with differing
///    exponents, the smaller exponent wins; equal tails force equality
///    (degrees being equal pins the x0 exponent).
struct monomial_order {
  std::vector<Int> weights;
  variable_convention convention = variable_convention::ascending;

  std::strong_ordering compare(const monomial& a, const monomial& b) const {
    Int da = weighted_degree(a, weights);
    Int db = weighted_degree(b, weights);
    if (da != db) return da <=> db;
    if (convention == variable_convention::ascending) {
      for (std::size_t i = 0; i < weights.size(); ++i) {
        if (a[i] != b[i])
          return a[i] < b[i] ? std::strong_ordering::greater
                             : std::strong_ordering::less;
      }
      return std::strong_ordering::equal;
    }
    for (std::size_t i = weights.size(); i-- > 1;) {
      if (a[i] != b[i])
        return a[i] < b[i] ? std::strong_ordering::greater
                           : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
  }

  bool less(const monomial& a, const monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const monomial& a, const monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
};

/// Monic binomial lead - trail with lead > trail under the order it was
/// built with.  The zero binomial is represented by an empty
/// std::optional<binomial> wherever it can arise.
struct binomial {
  monomial lead;
  monomial trail;

  friend bool operator==(const binomial& a, const binomial& b) {
    return a.lead == b.lead && a.trail == b.trail;
  }
  friend bool operator!=(const binomial& a, const binomial& b) {
    return !(a == b);
  }

  std::string str() const { return lead.str() + " - " + trail.str(); }
};

/// Normalizes +/-(a - b) so the larger monomial leads; a == b gives Zero.
inline std::optional<binomial> make_binomial(const monomial& a,
                                             const monomial& b,
                                             const monomial_order& ord) {
  auto c = ord.compare(a, b);
  if (c == std::strong_ordering::equal) return std::nullopt;
  if (c == std::strong_ordering::greater) return binomial{a, b};
  return binomial{b, a};
}

/// For a binomial, weight homogeneity is exactly membership in the toric
/// ideal P of the weight sequence.
inline bool is_homogeneous(const binomial& f, const std::vector<Int>& weights) {
  return weighted_degree(f.lead, weights) == weighted_degree(f.trail, weights);
}

/// Parses the str() rendering back: "x0^2*x2^2", "1".
inline monomial parse_monomial(std::string_view text, std::size_t nvars) {
  std::vector<Int> e(nvars, 0);
  if (text == "1") return monomial(std::move(e));
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'x') throw error("monomial parse: expected 'x'");
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw error("monomial parse: missing variable index");
    std::size_t idx = std::stoul(std::string(text.substr(start, pos - start)));
    if (idx >= nvars) throw error("monomial parse: variable index out of range");
    Int power = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw error("monomial parse: missing exponent");
      power = std::stoll(std::string(text.substr(start, pos - start)));
    }
    e[idx] = checked_add(e[idx], power);
    if (pos < text.size()) {
      if (text[pos] != '*') throw error("monomial parse: expected '*'");
      ++pos;
      if (pos == text.size()) throw error("monomial parse: trailing '*'");
    }
  }
  return monomial(std::move(e));
}

/// Parses "lead - trail" as rendered by binomial::str().
inline binomial parse_binomial(std::string_view text, std::size_t nvars) {
  auto sep = text.find(" - ");
  if (sep == std::string_view::npos) throw error("binomial parse: missing ' - '");
  return binomial{parse_monomial(text.substr(0, sep), nvars),
                  parse_monomial(text.substr(sep + 3), nvars)};
}

}  // namespace aatoric
