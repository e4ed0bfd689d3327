/**
 * @file json_io.hpp
 * @brief Schema-stable JSON rendering of parameter records, basis sets, and
 *        verification reports (shared by the CLI and the tests).
 */
#pragma once

#include <json.hpp>

#include "aatoric/verify.hpp"

namespace aatoric {

inline std::string to_string(variable_convention c) {
  return c == variable_convention::ascending ? "asc" : "desc";
}

inline nlohmann::json interval_to_json(const interval& iv) {
  if (iv.empty()) return nullptr;
  return nlohmann::json::array({iv.lo, iv.hi});
}

inline nlohmann::json params_to_json(const validated_sequence& seq,
                                     const semigroup_params& p) {
  return nlohmann::json{
      {"m", seq.generators()},
      {"n", seq.n()},
      {"p", p.p},
      {"u", p.u},
      {"v", p.upsilon},
      {"w", p.w},
      {"z", p.z},
      {"lambda", p.lambda},
      {"mu", p.mu},
      {"nu", p.nu},
      {"q", p.q},
      {"r", p.r},
      {"qprime", p.q_prime},
      {"rprime", p.r_prime},
      {"qz", p.q_z},
      {"rz", p.r_z},
      {"epsilon", p.epsilon},
      {"I", interval_to_json(p.I)},
      {"J", interval_to_json(p.J)},
  };
}

inline nlohmann::json basis_to_json(const basis_set& set) {
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& [tag, f] : set.elements) {
    elements.push_back({{"tag", tag.str()},
                        {"lead", f.lead.str()},
                        {"trail", f.trail.str()},
                        {"text", f.str()}});
  }
  return nlohmann::json{{"variant", to_string(set.variant)},
                        {"order", to_string(set.order.convention)},
                        {"elements", elements}};
}

inline nlohmann::json witness_to_json(const spair_witness& w) {
  return nlohmann::json{
      {"f", w.f.str()},
      {"g", w.g.str()},
      {"spoly", w.spoly ? nlohmann::json(w.spoly->str()) : nlohmann::json()},
      {"normal_form",
       w.normal_form ? nlohmann::json(w.normal_form->str()) : nlohmann::json()},
  };
}

inline nlohmann::json report_to_json(const verification_report& r) {
  nlohmann::json out{
      {"sequence", r.sequence},
      {"order_convention", to_string(r.order_convention)},
      {"variant", to_string(r.variant)},
      {"is_gb", r.is_gb},
      {"gb_witness",
       r.gb_witness ? witness_to_json(*r.gb_witness) : nlohmann::json()},
      {"is_minimal", r.is_minimal},
      {"is_reduced", r.is_reduced},
      {"c1", r.c1},
      {"c2", r.c2},
      {"engine_match", r.engine_match},
      {"standard_monomial_ok",
       r.standard_monomial_ok ? nlohmann::json(*r.standard_monomial_ok)
                              : nlohmann::json()},
      {"standard_monomial_witness",
       r.standard_monomial_witness
           ? nlohmann::json::array({r.standard_monomial_witness->first.str(),
                                    r.standard_monomial_witness->second.str()})
           : nlohmann::json()},
      {"degree_bound_used", r.degree_bound_used},
  };
  return out;
}

}  // namespace aatoric
