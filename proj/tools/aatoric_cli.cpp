// Command-line front end: parameter reports, basis construction,
// verification, counterexample reproduction, and family sweeps.
//
// Exit codes: 0 = success / claims verified, 1 = a verification claim
// failed (witness in the output), 2 = invalid input.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aatoric/json_io.hpp"
#include "aatoric/sweep.hpp"

namespace {

using namespace aatoric;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitInvalidInput = 2;

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string interval_str(const interval& iv) {
  if (iv.empty()) return "empty";
  return "[" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) + "]";
}

variable_convention parse_order(const std::string& name) {
  return name == "desc" ? variable_convention::descending
                        : variable_convention::ascending;
}

basis_variant parse_variant(const std::string& name) {
  if (name == "patil") return basis_variant::patil;
  if (name == "patil-singh") return basis_variant::patil_singh;
  return basis_variant::g;
}

void print_params_text(const validated_sequence& seq,
                       const semigroup_params& p) {
  std::cout << "sequence:";
  for (Int v : seq.generators()) std::cout << " " << v;
  std::cout << "  (n=" << seq.n() << ", p=" << p.p << ")\n";
  std::cout << "u = " << p.u << "  (q=" << p.q << ", r=" << p.r << ")\n";
  std::cout << "v = " << p.upsilon << "\n";
  std::cout << "lambda = " << p.lambda << ", w = " << p.w << "\n";
  std::cout << "mu = " << p.mu << ", z = " << p.z << "  (qz=" << p.q_z
            << ", rz=" << p.r_z << ", epsilon=" << p.epsilon << ")\n";
  std::cout << "qprime = " << p.q_prime << ", rprime = " << p.r_prime << "\n";
  std::cout << "nu = " << p.nu << "\n";
  std::cout << "W nonempty: " << yesno(p.w_nonempty) << "\n";
  std::cout << "I = " << interval_str(p.I) << "\n";
  std::cout << "J = " << interval_str(p.J) << "\n";
}

void print_report_text(const verification_report& r) {
  std::cout << "sequence:";
  for (Int v : r.sequence) std::cout << " " << v;
  std::cout << "\norder: " << to_string(r.order_convention)
            << "   set: " << to_string(r.variant) << "\n";
  std::cout << "groebner basis: " << yesno(r.is_gb) << "\n";
  if (r.gb_witness) {
    std::cout << "  failing s-pair: S(" << r.gb_witness->f.str() << ", "
              << r.gb_witness->g.str() << ")\n";
    if (r.gb_witness->normal_form)
      std::cout << "  irreducible remainder: "
                << r.gb_witness->normal_form->str() << "\n";
  }
  std::cout << "minimal: " << yesno(r.is_minimal) << "\n";
  std::cout << "reduced: " << yesno(r.is_reduced) << "   (C1: " << yesno(r.c1)
            << ", C2: " << yesno(r.c2)
            << "; reduced predicted: " << yesno(!r.c1 && !r.c2) << ")\n";
  std::cout << "engine match: " << yesno(r.engine_match) << "\n";
  if (r.standard_monomial_ok) {
    if (*r.standard_monomial_ok) {
      std::cout << "standard monomials: consistent up to bound "
                << r.degree_bound_used << "\n";
    } else {
      std::cout << "standard monomials: eta collision ("
                << r.standard_monomial_witness->first.str() << ", "
                << r.standard_monomial_witness->second.str()
                << ") within bound " << r.degree_bound_used << "\n";
    }
  }
}

validated_sequence validate_or_exit(const std::vector<Int>& m) {
  return validated_sequence::validate(m);  // throws validation_error
}

int run_params(const std::vector<Int>& m, const std::string& format) {
  auto seq = validate_or_exit(m);
  auto params = compute_params(seq);
  if (format == "json")
    std::cout << params_to_json(seq, params).dump(2) << "\n";
  else
    print_params_text(seq, params);
  return kExitOk;
}

int run_basis(const std::vector<Int>& m, const std::string& set_name,
              const std::string& order_name, const std::string& format) {
  auto seq = validate_or_exit(m);
  auto params = compute_params(seq);
  monomial_order order{seq.generators(), parse_order(order_name)};
  basis_set set =
      build_generators(seq, params, parse_variant(set_name), order);
  if (format == "json") {
    std::cout << basis_to_json(set).dump(2) << "\n";
  } else {
    std::cout << to_string(set.variant) << " basis, order "
              << to_string(order.convention) << ", " << set.elements.size()
              << " elements:\n";
    for (const auto& [tag, f] : set.elements)
      std::cout << "  " << tag.str() << ": " << f.str() << "\n";
  }
  return kExitOk;
}

int run_verify(const std::vector<Int>& m, const std::string& set_name,
               const std::string& order_name, const std::string& method,
               std::optional<Int> degree_bound, const std::string& format) {
  auto seq = validate_or_exit(m);
  cross_check_options opts;
  opts.variant = parse_variant(set_name);
  opts.degree_bound = degree_bound;
  opts.run_standard_monomials = (method != "buchberger");
  auto convention = parse_order(order_name);
  verification_report report = cross_check(seq, convention, opts);

  if (format == "json")
    std::cout << report_to_json(report).dump(2) << "\n";
  else
    print_report_text(report);

  if (method == "standard-monomials")
    return report.standard_monomial_ok.value_or(true) ? kExitOk
                                                      : kExitClaimFailed;

  bool ok = report.is_gb && report.engine_match;
  if (report.variant == basis_variant::g &&
      convention == variable_convention::ascending) {
    ok = ok && report.is_minimal &&
         report.is_reduced == (!report.c1 && !report.c2);
  }
  // The bounded check can never contradict a verified basis.
  if (report.is_gb && report.standard_monomial_ok)
    ok = ok && *report.standard_monomial_ok;
  return ok ? kExitOk : kExitClaimFailed;
}

int run_sweep(Int max_m, Int max_n, const std::string& order_name,
              const std::string& format) {
  if (max_m < 3 || max_n < 2) {
    std::cerr << "sweep: need --max-m >= 3 and --max-n >= 2\n";
    return kExitInvalidInput;
  }
  auto convention = parse_order(order_name);
  sweep_summary summary = run_sweep(max_m, max_n, convention);
  if (format == "json") {
    json violations = json::array();
    for (const auto& v : summary.violations)
      violations.push_back({{"m", v.m}, {"failed", v.violations}});
    json out{{"order", order_name},
             {"max_m", max_m},
             {"max_n", max_n},
             {"instances", summary.instances},
             {"violations", violations},
             {"ok", summary.violations.empty()}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "checked " << summary.instances
              << " valid sequences (max-m=" << max_m << ", max-n=" << max_n
              << ", order=" << order_name << ")\n";
    if (summary.violations.empty()) {
      std::cout << "all claims hold\n";
    } else {
      for (const auto& v : summary.violations) {
        std::cout << "violation at m =";
        for (Int x : v.m) std::cout << " " << x;
        std::cout << ":";
        for (const auto& name : v.violations) std::cout << " " << name;
        std::cout << "\n";
      }
    }
  }
  return summary.violations.empty() ? kExitOk : kExitClaimFailed;
}

int run_repro_patil(Int m0, const std::string& format) {
  if (m0 < 5 || m0 % 2 == 0) {
    std::cerr << "repro patil-counterexample: --m0 must be odd and >= 5\n";
    return kExitInvalidInput;
  }
  auto seq = validate_or_exit({m0, m0 + 1, m0 - 1});
  auto params = compute_params(seq);
  monomial_order order{seq.generators(), variable_convention::ascending};

  bool params_ok = params.upsilon == (m0 + 1) / 2 && params.u == (m0 + 1) / 2 &&
                   params.mu == 0 && params.z == (m0 - 1) / 2 &&
                   params.w == (m0 - 1) / 2 && params.lambda == 2 &&
                   params.p == 1 && params.r == 1 && params.r_prime == 1;

  basis_set patil =
      build_generators(seq, params, basis_variant::patil, order);
  basis_set g = build_generators(seq, params, basis_variant::g, order);

  auto [patil_gb, witness] = verify_buchberger(patil);
  auto [g_gb, g_witness] = verify_buchberger(g);
  bool g_reduced = is_reduced_basis(g);
  auto [sm_ok, sm_witness] =
      verify_standard_monomials(patil, default_degree_bound(patil));

  bool reproduced =
      params_ok && !patil_gb && witness.has_value() && g_gb && g_reduced && !sm_ok;

  if (format == "json") {
    json out{{"m", seq.generators()},
             {"params_match_family", params_ok},
             {"patil_is_gb", patil_gb},
             {"patil_witness",
              witness ? witness_to_json(*witness) : json()},
             {"patil_eta_collision",
              sm_witness ? json::array({sm_witness->first.str(),
                                        sm_witness->second.str()})
                         : json()},
             {"g_is_gb", g_gb},
             {"g_is_reduced", g_reduced},
             {"reproduced", reproduced}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "sequence: " << m0 << " " << (m0 + 1) << " " << (m0 - 1)
              << "\n";
    std::cout << "family parameters match: " << yesno(params_ok) << "\n";
    std::cout << "patil set is a groebner basis: " << yesno(patil_gb) << "\n";
    if (witness) {
      std::cout << "  failing s-pair: S(" << witness->f.str() << ", "
                << witness->g.str() << ")\n";
      std::cout << "  irreducible remainder: "
                << witness->normal_form->str() << "\n";
    }
    if (sm_witness)
      std::cout << "  eta collision: (" << sm_witness->first.str() << ", "
                << sm_witness->second.str() << ")\n";
    std::cout << "g is a groebner basis: " << yesno(g_gb)
              << ", reduced: " << yesno(g_reduced) << "\n";
    std::cout << "counterexample reproduced: " << yesno(reproduced) << "\n";
  }
  return reproduced ? kExitOk : kExitClaimFailed;
}

int run_repro_ps_desc(const std::string& format) {
  auto seq = validate_or_exit({20, 21, 22, 23, 24, 29});
  auto params = compute_params(seq);
  monomial_order order{seq.generators(), variable_convention::descending};

  bool params_ok = params.upsilon == 3 && params.mu == 2 && params.q_z == 1 &&
                   params.r_z == 3 && params.z == 7 && params.u == 9 &&
                   params.q == 2 && params.r == 1 && params.lambda == 2 &&
                   params.w == 1 && params.r_prime == 2 && params.q_prime == 0;

  basis_set ps =
      build_generators(seq, params, basis_variant::patil_singh, order);
  auto [gb, witness] = verify_buchberger(ps);

  const binomial* theta = nullptr;
  const binomial* xi13 = nullptr;
  for (const auto& [tag, f] : ps.elements) {
    if (tag == generator_tag::theta()) theta = &f;
    if (tag == generator_tag::xi(1, 3)) xi13 = &f;
  }
  bool witness_ok = false;
  std::optional<binomial> spair;
  if (theta && xi13) {
    spair = s_polynomial(*theta, *xi13, order);
    auto expected = make_binomial(parse_monomial("x1*x5^3", 6),
                                  parse_monomial("x0^3*x4^2", 6), order);
    auto remainder = normal_form(spair, ps.binomials(), order);
    witness_ok = spair && expected && *spair == *expected && remainder &&
                 *remainder == *spair;
  }

  bool reproduced = params_ok && !gb && witness_ok;

  if (format == "json") {
    json out{{"m", seq.generators()},
             {"params_match_example", params_ok},
             {"patil_singh_is_gb_desc", gb},
             {"s_theta_xi13", spair ? json(spair->str()) : json()},
             {"s_theta_xi13_irreducible", witness_ok},
             {"first_witness", witness ? witness_to_json(*witness) : json()},
             {"reproduced", reproduced}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "sequence: 20 21 22 23 24 29 (descending order)\n";
    std::cout << "example parameters match: " << yesno(params_ok) << "\n";
    std::cout << "patil-singh set is a groebner basis: " << yesno(gb) << "\n";
    if (spair)
      std::cout << "S(theta, xi(1,3)) = " << spair->str()
                << (witness_ok ? "  (irreducible)" : "") << "\n";
    std::cout << "counterexample reproduced: " << yesno(reproduced) << "\n";
  }
  return reproduced ? kExitOk : kExitClaimFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact computation and verification of the defining parameters and "
      "Groebner bases of monomial-curve toric ideals over almost arithmetic "
      "sequences"};
  app.require_subcommand(1);

  std::vector<Int> m;
  std::string format = "text";
  std::string set_name = "g";
  std::string order_name = "asc";
  std::string method = "both";
  Int degree_bound = -1;
  Int max_m = 40;
  Int max_n = 5;
  Int repro_m0 = 5;

  const std::vector<std::string> sets{"g", "patil", "patil-singh"};
  const std::vector<std::string> orders{"asc", "desc"};
  const std::vector<std::string> formats{"text", "json"};
  const std::vector<std::string> methods{"buchberger", "standard-monomials",
                                         "both"};

  auto* cmd_params =
      app.add_subcommand("params", "semigroup parameters of a sequence");
  cmd_params->add_option("m", m, "generators m0 ... mn (mn last)")
      ->required()
      ->expected(-3);
  cmd_params->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* cmd_basis =
      app.add_subcommand("basis", "closed-form generator set of the ideal");
  cmd_basis->add_option("m", m, "generators m0 ... mn (mn last)")
      ->required()
      ->expected(-3);
  cmd_basis->add_option("--set", set_name)->check(CLI::IsMember(sets));
  cmd_basis->add_option("--order", order_name)->check(CLI::IsMember(orders));
  cmd_basis->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* cmd_verify =
      app.add_subcommand("verify", "verify the basis claims for a sequence");
  cmd_verify->add_option("m", m, "generators m0 ... mn (mn last)")
      ->required()
      ->expected(-3);
  cmd_verify->add_option("--set", set_name)->check(CLI::IsMember(sets));
  cmd_verify->add_option("--order", order_name)->check(CLI::IsMember(orders));
  cmd_verify->add_option("--method", method)->check(CLI::IsMember(methods));
  cmd_verify->add_option("--degree-bound", degree_bound,
                         "bound for the standard-monomial check");
  cmd_verify->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* cmd_sweep = app.add_subcommand(
      "sweep", "cross-check every valid sequence in a range");
  cmd_sweep->add_option("--max-m", max_m, "largest allowed generator");
  cmd_sweep->add_option("--max-n", max_n, "largest allowed n");
  cmd_sweep->add_option("--order", order_name)->check(CLI::IsMember(orders));
  cmd_sweep->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* cmd_repro =
      app.add_subcommand("repro", "reproduce the two counterexample constructions");
  cmd_repro->require_subcommand(1);
  auto* cmd_repro_patil = cmd_repro->add_subcommand(
      "patil-counterexample",
      "Patil set fails the Buchberger criterion on (m0, m0+1, m0-1)");
  cmd_repro_patil->add_option("--m0", repro_m0, "odd m0 >= 5")->required();
  cmd_repro_patil->add_option("--format", format)
      ->check(CLI::IsMember(formats));
  auto* cmd_repro_ps = cmd_repro->add_subcommand(
      "ps-desc-counterexample",
      "Patil-Singh set fails under the descending order on (20..24, 29)");
  cmd_repro_ps->add_option("--format", format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (cmd_params->parsed()) return run_params(m, format);
    if (cmd_basis->parsed()) return run_basis(m, set_name, order_name, format);
    if (cmd_verify->parsed()) {
      std::optional<Int> bound;
      if (cmd_verify->count("--degree-bound")) {
        if (degree_bound < 0) {
          std::cerr << "--degree-bound must be nonnegative\n";
          return kExitInvalidInput;
        }
        bound = degree_bound;
      }
      return run_verify(m, set_name, order_name, method, bound, format);
    }
    if (cmd_sweep->parsed())
      return run_sweep(max_m, max_n, order_name, format);
    if (cmd_repro->parsed()) {
      if (cmd_repro_patil->parsed()) return run_repro_patil(repro_m0, format);
      return run_repro_ps_desc(format);
    }
  } catch (const validation_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return kExitInvalidInput;
}
