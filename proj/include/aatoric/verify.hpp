/**
 * @file verify.hpp
 * @brief End-to-end verification: the Buchberger criterion on the closed-form
 *        sets, the bounded standard-monomial eta-injectivity method, and the
 *        engine cross-check against the from-scratch reduced basis.
 */
#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "aatoric/closedform.hpp"
#include "aatoric/groebner.hpp"

namespace aatoric {

struct verification_report {
  std::vector<Int> sequence;
  variable_convention order_convention = variable_convention::ascending;
  basis_variant variant = basis_variant::g;

  bool is_gb = false;
  std::optional<spair_witness> gb_witness;
  bool is_minimal = false;
  bool is_reduced = false;
  bool c1 = false;
  bool c2 = false;
  bool engine_match = false;
  std::optional<bool> standard_monomial_ok;
  std::optional<std::pair<monomial, monomial>> standard_monomial_witness;
  Int degree_bound_used = 0;
};

/// Buchberger-criterion check of a closed-form set.
inline std::pair<bool, std::optional<spair_witness>> verify_buchberger(
    const basis_set& set) {
  return is_groebner(set.binomials(), set.order);
}

/// Default enumeration bound: twice the maximal weighted degree over the
/// basis.  A failing S-pair leaves an irreducible homogeneous remainder,
/// i.e. an eta collision between standard monomials at the degree of the
/// pair's lcm, which is at most twice the maximal element degree; the
/// default therefore refutes every set the Buchberger criterion refutes.
inline Int default_degree_bound(const basis_set& set) {
  Int max_deg = 0;
  for (const auto& [tag, f] : set.elements)
    max_deg = std::max(max_deg, weighted_degree(f.lead, set.order.weights));
  return checked_mul(Int{2}, max_deg);
}

namespace detail {

/// All monomials of weighted degree <= bound divisible by no lead of the
/// set.  DFS assigns exponents from xn down to x1 and prunes a subtree as
/// soon as some lead is dominated on its full support (every completion of
/// such a node is divisible).  The x0 exponent is filled in last as a run
/// capped below the smallest x0 exponent of any lead whose x1..xn part the
/// current tail already dominates.
inline std::vector<monomial> standard_monomials(const std::vector<binomial>& set,
                                                const std::vector<Int>& weights,
                                                Int bound) {
  const std::size_t nvars = weights.size();
  std::vector<monomial> leads;
  leads.reserve(set.size());
  for (const binomial& f : set) leads.push_back(f.lead);

  std::vector<Int> exps(nvars, 0);
  std::vector<monomial> out;

  // True iff some lead L with support in [var, n] satisfies exps >= L there;
  // every completion of such a tail is divisible by L.
  auto dominated = [&](std::size_t var) {
    for (const monomial& l : leads) {
      bool dom = true;
      for (std::size_t i = 0; i < nvars; ++i) {
        Int li = l[i];
        if (li == 0) continue;
        if (i < var || exps[i] < li) {
          dom = false;
          break;
        }
      }
      if (dom) return true;
    }
    return false;
  };

  // Largest x0 exponent keeping the current tail standard: one less than the
  // smallest L[0] over leads dominated on x1..xn (such leads divide exactly
  // the extensions with exponent >= L[0]).
  auto x0_cap = [&](Int budget_cap) {
    Int cap = budget_cap;
    for (const monomial& l : leads) {
      bool tail_dom = true;
      for (std::size_t i = 1; i < nvars; ++i)
        if (exps[i] < l[i]) {
          tail_dom = false;
          break;
        }
      if (tail_dom) cap = std::min(cap, l[0] - 1);
    }
    return cap;
  };

  std::function<void(std::size_t, Int)> descend = [&](std::size_t var,
                                                      Int budget) {
    if (var == 0) {
      Int cap = x0_cap(budget / weights[0]);
      for (Int e = 0; e <= cap; ++e) {
        exps[0] = e;
        out.push_back(monomial(exps));
      }
      exps[0] = 0;
      return;
    }
    for (Int e = 0; checked_mul(e, weights[var]) <= budget; ++e) {
      exps[var] = e;
      if (!dominated(var))
        descend(var - 1, budget - e * weights[var]);
      else
        break;  // larger exponents stay dominated
    }
    exps[var] = 0;
  };

  descend(nvars - 1, bound);
  return out;
}

}  // namespace detail

/// Bounded eta-injectivity: enumerates the standard monomials of the set up
/// to the bound and looks for two with equal eta-value.  A collision is a
/// proof the set is not a Groebner basis; no collision is evidence only
/// ("consistent up to the bound").  The returned witness is the
/// lexicographically least colliding pair at the least colliding eta-value.
inline std::pair<bool, std::optional<std::pair<monomial, monomial>>>
verify_standard_monomials(const basis_set& set, Int degree_bound) {
  auto mons = detail::standard_monomials(set.binomials(), set.order.weights,
                                         degree_bound);
  std::vector<std::pair<Int, monomial>> keyed;
  keyed.reserve(mons.size());
  for (auto& m : mons)
    keyed.emplace_back(weighted_degree(m, set.order.weights), std::move(m));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first < b.first;
              return lex_less(a.second, b.second);
            });
  for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i + 1].first)
      return {false, std::make_pair(keyed[i].second, keyed[i + 1].second)};
  }
  return {true, std::nullopt};
}

/// Parameter configurations under which a generator set provably fails the
/// Buchberger criterion:
///  - patil_not_gb:    r' >= r, mu = 0, W != empty; the Patil set fails
///    under the ascending order;
///  - ps_not_gb_desc:  r < r_z < p, lambda > 1, w > 0; the Patil-Singh set
///    fails under the descending order.
struct remark_flags {
  bool patil_not_gb = false;
  bool ps_not_gb_desc = false;
};

inline remark_flags remark_hypotheses(const semigroup_params& params) {
  remark_flags out;
  out.patil_not_gb =
      params.r_prime >= params.r && params.mu == 0 && params.w_nonempty;
  out.ps_not_gb_desc = params.r < params.r_z && params.r_z < params.p &&
                       params.lambda > 1 && params.w > 0;
  return out;
}

struct cross_check_options {
  basis_variant variant = basis_variant::g;
  std::optional<Int> degree_bound;
  bool run_standard_monomials = true;
};

/// Builds all three variants, checks the Buchberger criterion on the focus
/// variant, evaluates minimality/reducedness and C1/C2, compares the reduced
/// bases computed from G and from Patil-Singh (engine_match must hold under
/// any order since the reduced basis of the ideal is unique), and runs the
/// bounded standard-monomial check.
inline verification_report cross_check(const validated_sequence& seq,
                                       variable_convention convention,
                                       const cross_check_options& opts = {}) {
  const semigroup_params params = compute_params(seq);
  const monomial_order order{seq.generators(), convention};

  verification_report report;
  report.sequence = seq.generators();
  report.order_convention = convention;
  report.variant = opts.variant;

  basis_set g = build_generators(seq, params, basis_variant::g, order);
  basis_set ps =
      build_generators(seq, params, basis_variant::patil_singh, order);
  basis_set focus =
      (opts.variant == basis_variant::g)
          ? g
          : (opts.variant == basis_variant::patil_singh
                 ? ps
                 : build_generators(seq, params, basis_variant::patil, order));

  auto [gb, witness] = verify_buchberger(focus);
  report.is_gb = gb;
  report.gb_witness = witness;

  report.is_minimal = is_minimal_basis(focus);
  report.is_reduced = is_reduced_basis(focus);

  condition_report cond = check_conditions(params);
  report.c1 = cond.c1;
  report.c2 = cond.c2;

  auto reduced_from_g = interreduce(buchberger(g.binomials(), order).basis, order);
  auto reduced_from_ps =
      interreduce(buchberger(ps.binomials(), order).basis, order);
  report.engine_match = (reduced_from_g == reduced_from_ps);

  report.degree_bound_used =
      opts.degree_bound ? *opts.degree_bound : default_degree_bound(focus);
  if (opts.run_standard_monomials) {
    auto [ok, pair] = verify_standard_monomials(focus, report.degree_bound_used);
    report.standard_monomial_ok = ok;
    report.standard_monomial_witness = pair;
  }

  return report;
}

}  // namespace aatoric
