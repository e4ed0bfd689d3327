/**
 * @file sweep.hpp
 * @brief Family sweep: enumerate every valid almost arithmetic sequence in a
 *        range and check all basis claims on each instance.
 */
#pragma once

#include <string>
#include <vector>

#include "aatoric/verify.hpp"

namespace aatoric {

/// Calls fn(seq) for every valid sequence with 2 <= n <= max_n and all
/// generators <= max_m, in sorted order (n, m0, step, mn).
template <typename Fn>
void enumerate_valid_sequences(Int max_m, Int max_n, Fn&& fn) {
  for (Int n = 2; n <= max_n; ++n) {
    Int p = n - 1;
    for (Int m0 = 1; m0 <= max_m; ++m0) {
      for (Int step = 1; m0 + p * step <= max_m; ++step) {
        for (Int mn = 1; mn <= max_m; ++mn) {
          std::vector<Int> m;
          for (Int i = 0; i <= p; ++i) m.push_back(m0 + i * step);
          m.push_back(mn);
          try {
            fn(validated_sequence::validate(std::move(m)));
          } catch (const validation_error&) {
            // not a member of the family; skip
          }
        }
      }
    }
  }
}

struct sweep_instance_result {
  std::vector<Int> m;
  std::vector<std::string> violations;
};

namespace detail {

inline std::vector<binomial> canonical_set(std::vector<binomial> set,
                                           const monomial_order& ord) {
  std::sort(set.begin(), set.end(), [&](const binomial& a, const binomial& b) {
    auto c = ord.compare(a.lead, b.lead);
    if (c != std::strong_ordering::equal)
      return c == std::strong_ordering::greater;
    return ord.greater(a.trail, b.trail);
  });
  return set;
}

}  // namespace detail

/// Checks every claim that holds for the given order on one instance and
/// returns the names of any that fail.
///
/// Ascending: G is a Groebner basis, minimal, and reduced exactly when
/// neither C1 nor C2 holds; Patil-Singh is a Groebner basis and is minimal
/// exactly when it coincides with G; the Patil set fails the Buchberger
/// criterion whenever the patil_not_gb hypotheses hold; the reduced bases
/// computed from G and from Patil-Singh agree; and the bounded
/// standard-monomial check agrees with the Buchberger verdict on every
/// variant.
///
/// Descending: Patil-Singh fails the Buchberger criterion whenever the
/// ps_not_gb_desc hypotheses hold, and the two reduced-basis routes agree.
inline sweep_instance_result sweep_check(const validated_sequence& seq,
                                         variable_convention convention) {
  sweep_instance_result out;
  out.m = seq.generators();
  auto fail = [&](const std::string& name) { out.violations.push_back(name); };

  const semigroup_params params = compute_params(seq);
  const monomial_order order{seq.generators(), convention};
  const basis_set g = build_generators(seq, params, basis_variant::g, order);
  const basis_set patil =
      build_generators(seq, params, basis_variant::patil, order);
  const basis_set ps =
      build_generators(seq, params, basis_variant::patil_singh, order);
  const remark_flags flags = remark_hypotheses(params);

  auto reduced_from_g =
      interreduce(buchberger(g.binomials(), order).basis, order);
  auto reduced_from_ps =
      interreduce(buchberger(ps.binomials(), order).basis, order);
  if (reduced_from_g != reduced_from_ps) fail("engine_match");

  if (convention == variable_convention::descending) {
    if (flags.ps_not_gb_desc && verify_buchberger(ps).first)
      fail("ps_desc_refutation");
    return out;
  }

  const bool g_gb = verify_buchberger(g).first;
  const bool ps_gb = verify_buchberger(ps).first;
  const bool patil_gb = verify_buchberger(patil).first;

  if (!g_gb) fail("g_groebner");
  if (!is_minimal_basis(g)) fail("g_minimal");
  if (is_reduced_basis(g) != check_conditions(params).reduced_predicted)
    fail("g_reduced_iff_conditions");
  if (!ps_gb) fail("ps_groebner");

  const bool ps_equals_g =
      detail::canonical_set(ps.binomials(), order) ==
      detail::canonical_set(g.binomials(), order);
  if (is_minimal_basis(ps) != ps_equals_g) fail("ps_minimal_iff_equals_g");

  if (flags.patil_not_gb && patil_gb) fail("patil_refutation");

  for (const basis_set* set : {&g, &patil, &ps}) {
    bool gb = (set == &g) ? g_gb : (set == &ps ? ps_gb : patil_gb);
    bool sm = verify_standard_monomials(*set, default_degree_bound(*set)).first;
    if (gb != sm) {
      fail(std::string("standard_monomial_coupling_") + to_string(set->variant));
    }
  }

  return out;
}

struct sweep_summary {
  Int instances = 0;
  std::vector<sweep_instance_result> violations;
};

inline sweep_summary run_sweep(Int max_m, Int max_n,
                               variable_convention convention) {
  sweep_summary summary;
  enumerate_valid_sequences(max_m, max_n, [&](const validated_sequence& seq) {
    ++summary.instances;
    auto result = sweep_check(seq, convention);
    if (!result.violations.empty()) summary.violations.push_back(result);
  });
  return summary;
}

}  // namespace aatoric
