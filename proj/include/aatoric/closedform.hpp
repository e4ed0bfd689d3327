/**
 * @file closedform.hpp
 * @brief The explicit generator sets of the toric ideal (the xi/phi/psi/theta
 *        binomials) in their three index regimes, the conditions C1/C2, and
 *        the minimality/reducedness predicates on monomial divisibility.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aatoric/polycore.hpp"
#include "aatoric/semigroup.hpp"

namespace aatoric {

enum class basis_variant { g, patil, patil_singh };

inline std::string to_string(basis_variant v) {
  switch (v) {
    case basis_variant::g: return "g";
    case basis_variant::patil: return "patil";
    case basis_variant::patil_singh: return "patil-singh";
  }
  return "?";
}

struct generator_tag {
  enum class kind { xi, phi, psi, theta };
  kind k = kind::theta;
  Int i = 0;
  Int j = 0;

  static generator_tag xi(Int i, Int j) { return {kind::xi, i, j}; }
  static generator_tag phi(Int i) { return {kind::phi, i, 0}; }
  static generator_tag psi(Int j) { return {kind::psi, j, 0}; }
  static generator_tag theta() { return {kind::theta, 0, 0}; }

  std::string str() const {
    switch (k) {
      case kind::xi:
        return "xi(" + std::to_string(i) + "," + std::to_string(j) + ")";
      case kind::phi: return "phi(" + std::to_string(i) + ")";
      case kind::psi: return "psi(" + std::to_string(i) + ")";
      case kind::theta: return "theta";
    }
    return "?";
  }

  friend bool operator==(const generator_tag& a, const generator_tag& b) {
    return a.k == b.k && a.i == b.i && a.j == b.j;
  }
};

/// A tagged generator collection (G, Patil, or Patil-Singh) for one sequence
/// and one monomial order.
struct basis_set {
  basis_variant variant = basis_variant::g;
  std::vector<std::pair<generator_tag, binomial>> elements;
  semigroup_params params;
  monomial_order order;

  std::vector<binomial> binomials() const {
    std::vector<binomial> out;
    out.reserve(elements.size());
    for (const auto& [tag, f] : elements) out.push_back(f);
    return out;
  }
};

struct condition_report {
  bool c1 = false;
  bool c2 = false;
  bool reduced_predicted = false;  // neither condition holds
};

/// C1: J != empty, q' = 0, v-w <= w, r' <= p-r.
/// C2: q = 1 and r <= p-2.
///
/// C1 captures exactly the configurations where some phi trail
/// x0^(lambda-1) * x_i * xn^w is divisible by a psi lead
/// x_(r'+j) * xn^(v-w): no lead contains x0, so the x0 power of the trail
/// (hence lambda) cannot enter the divisibility.  C2 captures the xi trails
/// x_(i+j-p) * x_p divisible by the phi(0) lead x_r * x_p^q.
inline condition_report check_conditions(const semigroup_params& params) {
  condition_report out;
  out.c1 = !params.J.empty() && params.q_prime == 0 &&
           params.upsilon - params.w <= params.w &&
           params.r_prime <= params.p - params.r;
  out.c2 = params.q == 1 && params.r <= params.p - 2;
  out.reduced_predicted = !out.c1 && !out.c2;
  return out;
}

namespace detail {

inline monomial build(std::size_t nvars,
                      std::initializer_list<std::pair<Int, Int>> factors) {
  std::vector<Int> e(nvars, 0);
  for (auto [var, power] : factors)
    e.at(static_cast<std::size_t>(var)) =
        checked_add(e.at(static_cast<std::size_t>(var)), power);
  return monomial(std::move(e));
}

inline binomial emit(const monomial& a, const monomial& b,
                     const monomial_order& ord) {
  auto f = make_binomial(a, b, ord);
  if (!f) throw internal_inconsistency("closed-form generator collapsed to zero");
  if (!is_homogeneous(*f, ord.weights))
    throw internal_inconsistency("closed-form generator " + f->str() +
                                 " is not homogeneous");
  return *f;
}

}  // namespace detail

/// Emits the requested variant, in the order phi, psi, theta, xi.  The three
/// variants differ only in the phi/psi index ranges:
///   phi: [0,p-r] for G and Patil-Singh, the interval I for Patil;
///   psi: J for G and Patil, [0,p-r'] for Patil-Singh.
/// theta uses the rewritten form xn^v - x0^mu * x_{r_z} * x_p^{q_z}, whose
/// monomial factor for g_z degenerates to 1 when z = 0.
inline basis_set build_generators(const validated_sequence& seq,
                                  const semigroup_params& params,
                                  basis_variant variant,
                                  const monomial_order& order) {
  const std::size_t nvars = seq.n() + 1;
  const Int p = params.p;
  const Int n = static_cast<Int>(seq.n());

  basis_set out;
  out.variant = variant;
  out.params = params;
  out.order = order;

  interval phi_range{0, p - params.r};
  if (variant == basis_variant::patil) phi_range = params.I;

  interval psi_range = params.J;
  if (variant == basis_variant::patil_singh)
    psi_range = {0, p - params.r_prime};

  for (Int i = phi_range.lo; i <= phi_range.hi; ++i) {
    monomial lead = detail::build(nvars, {{params.r + i, 1}, {p, params.q}});
    monomial trail = detail::build(
        nvars, {{0, params.lambda - 1}, {i, 1}, {n, params.w}});
    out.elements.emplace_back(generator_tag::phi(i),
                              detail::emit(lead, trail, order));
  }

  for (Int j = psi_range.lo; j <= psi_range.hi; ++j) {
    monomial lead = detail::build(
        nvars, {{params.r_prime + j, 1}, {p, params.q_prime},
                {n, params.upsilon - params.w}});
    monomial trail = detail::build(nvars, {{0, params.nu - 1}, {j, 1}});
    out.elements.emplace_back(generator_tag::psi(j),
                              detail::emit(lead, trail, order));
  }

  {
    monomial lead = detail::build(nvars, {{n, params.upsilon}});
    monomial trail =
        (params.z == 0)
            ? detail::build(nvars, {{0, params.mu}})
            : detail::build(nvars,
                            {{0, params.mu}, {params.r_z, 1}, {p, params.q_z}});
    out.elements.emplace_back(generator_tag::theta(),
                              detail::emit(lead, trail, order));
  }

  for (Int i = 1; i <= p - 1; ++i) {
    for (Int j = i; j <= p - 1; ++j) {
      monomial lead = detail::build(nvars, {{i, 1}, {j, 1}});
      monomial trail = (i + j <= p)
                           ? detail::build(nvars, {{0, 1}, {i + j, 1}})
                           : detail::build(nvars, {{i + j - p, 1}, {p, 1}});
      out.elements.emplace_back(generator_tag::xi(i, j),
                                detail::emit(lead, trail, order));
    }
  }

  return out;
}

/// Clause (ii) of the minimal/reduced definition: no element's lead monomial
/// is divisible by another element's lead.  (Clause (i) is monic by
/// construction.)
inline bool is_minimal_basis(const basis_set& set) {
  const auto elems = set.binomials();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      if (elems[j].lead.divides(elems[i].lead)) return false;
    }
  return true;
}

/// Clause (ii'): no monomial appearing in any element is divisible by
/// another element's lead.
inline bool is_reduced_basis(const basis_set& set) {
  const auto elems = set.binomials();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      if (elems[j].lead.divides(elems[i].lead)) return false;
      if (elems[j].lead.divides(elems[i].trail)) return false;
    }
  return true;
}

}  // namespace aatoric
