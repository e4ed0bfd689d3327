/**
 * @file groebner.hpp
 * @brief Binomial Groebner engine: S-polynomials, normal forms, Buchberger's
 *        algorithm, the Buchberger criterion, and interreduction.
 *
 * Monic binomials are closed under S-polynomials and reduction, so the
 * engine never touches coefficients; cancellation to Zero (an empty
 * optional) is the only degenerate case.
 */
#pragma once

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "aatoric/polycore.hpp"

namespace aatoric {

/// One S-pair together with its S-polynomial and fully reduced remainder.
struct spair_witness {
  binomial f;
  binomial g;
  std::optional<binomial> spoly;
  std::optional<binomial> normal_form;
};

struct groebner_result {
  std::vector<binomial> basis;
  std::vector<binomial> added;
  bool is_input_gb = false;
};

inline std::optional<binomial> s_polynomial(const binomial& f, const binomial& g,
                                            const monomial_order& ord) {
  monomial l = lcm(f.lead, g.lead);
  return make_binomial((l / f.lead) * f.trail, (l / g.lead) * g.trail, ord);
}

namespace detail {

/// First basis element whose lead divides m, or -1.
inline std::ptrdiff_t find_reducer(const monomial& m,
                                   const std::vector<binomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].lead.divides(m)) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

/// Rewrites a single monomial until no basis lead divides it.  Each step
/// strictly decreases the monomial in the order, so this terminates.
inline monomial reduce_monomial(monomial m, const std::vector<binomial>& basis) {
  for (;;) {
    std::ptrdiff_t i = find_reducer(m, basis);
    if (i < 0) return m;
    m = (m / basis[static_cast<std::size_t>(i)].lead) *
        basis[static_cast<std::size_t>(i)].trail;
  }
}

inline bool coprime(const monomial& a, const monomial& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline void check_homogeneous(const std::vector<binomial>& gens,
                              const monomial_order& ord) {
  for (const binomial& f : gens)
    if (!is_homogeneous(f, ord.weights))
      throw non_homogeneous_input("generator " + f.str() +
                                  " is not weight-homogeneous");
}

}  // namespace detail

/// Fully reduced remainder: no monomial of the result is divisible by any
/// basis lead.  Reduces the lead until irreducible (renormalizing, which may
/// cancel to Zero), then tail-reduces.
inline std::optional<binomial> normal_form(std::optional<binomial> f,
                                           const std::vector<binomial>& basis,
                                           const monomial_order& ord) {
  while (f) {
    std::ptrdiff_t i = detail::find_reducer(f->lead, basis);
    if (i < 0) break;
    const binomial& g = basis[static_cast<std::size_t>(i)];
    f = make_binomial((f->lead / g.lead) * g.trail, f->trail, ord);
  }
  if (f) f->trail = detail::reduce_monomial(f->trail, basis);
  return f;
}

/// Buchberger completion with a FIFO pair queue and the coprime-lead skip.
/// Input generators must be weight-homogeneous; every appended element is
/// again homogeneous (asserted).
inline groebner_result buchberger(const std::vector<binomial>& gens,
                                  const monomial_order& ord) {
  detail::check_homogeneous(gens, ord);
  groebner_result out;
  out.basis = gens;

  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 1; j < out.basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    if (detail::coprime(out.basis[i].lead, out.basis[j].lead)) continue;
    auto nf = normal_form(s_polynomial(out.basis[i], out.basis[j], ord),
                          out.basis, ord);
    if (!nf) continue;
    if (!is_homogeneous(*nf, ord.weights))
      throw internal_inconsistency("engine produced non-homogeneous element");
    std::size_t k = out.basis.size();
    out.basis.push_back(*nf);
    out.added.push_back(*nf);
    for (std::size_t i2 = 0; i2 < k; ++i2) queue.emplace_back(i2, k);
  }

  out.is_input_gb = out.added.empty();
  return out;
}

/// Buchberger criterion: true iff every S-pair reduces to Zero.  On failure
/// returns the first failing pair in (i,j) enumeration order.
inline std::pair<bool, std::optional<spair_witness>> is_groebner(
    const std::vector<binomial>& set, const monomial_order& ord) {
  detail::check_homogeneous(set, ord);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (detail::coprime(set[i].lead, set[j].lead)) continue;
      auto s = s_polynomial(set[i], set[j], ord);
      auto nf = normal_form(s, set, ord);
      if (nf) return {false, spair_witness{set[i], set[j], s, nf}};
    }
  }
  return {true, std::nullopt};
}

/// Unique reduced Groebner basis of a caller-verified Groebner basis:
/// drops elements with redundant leads, tail-reduces the survivors, and
/// sorts descending by lead.  Idempotent.
inline std::vector<binomial> interreduce(const std::vector<binomial>& basis,
                                         const monomial_order& ord) {
  std::vector<binomial> sorted = basis;
  std::sort(sorted.begin(), sorted.end(), [&](const binomial& a, const binomial& b) {
    return ord.less(a.lead, b.lead);
  });

  std::vector<binomial> minimal;
  for (const binomial& f : sorted) {
    bool redundant = false;
    for (const binomial& g : minimal)
      if (g.lead.divides(f.lead)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(f);
  }

  std::vector<binomial> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<binomial> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    monomial trail = detail::reduce_monomial(minimal[i].trail, others);
    out.push_back(binomial{minimal[i].lead, trail});
  }

  std::sort(out.begin(), out.end(), [&](const binomial& a, const binomial& b) {
    return ord.greater(a.lead, b.lead);
  });
  return out;
}

}  // namespace aatoric
