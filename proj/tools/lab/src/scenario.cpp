#include "ncdiff/lab/scenario.hpp"

#include <algorithm>

#include "ncdiff/errors.hpp"

namespace ncdiff::lab {

const char* to_string(Expect e) {
  switch (e) {
    case Expect::equality: return "equality";
    case Expect::inclusion: return "inclusion";
    case Expect::dimension: return "dimension";
    case Expect::holds: return "holds";
    case Expect::witness_required: return "witness-required";
    case Expect::witness_or_negative: return "witness-or-negative";
  }
  return "?";
}

json Environment::to_json() const {
  return {{"field", field},
          {"seed", seed},
          {"caps",
           {{"ce_degree", ce_degree},
            {"graded_ce_degree", graded_ce_degree},
            {"universal_degree", universal_degree},
            {"jet_order", jet_order}}}};
}

bool Report::ok() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.outcome.met; });
}

json Report::to_json() const {
  json checks = json::array();
  for (const auto& r : results) {
    json c = {{"id", r.id},
              {"operation", r.operation},
              {"expect", lab::to_string(r.expect)},
              {"claims", r.claims},
              {"met", r.outcome.met},
              {"status", r.outcome.status},
              {"data", r.outcome.data}};
    if (!r.error.empty()) c["error"] = r.error;
    checks.push_back(std::move(c));
  }
  return {{"scenario", scenario},
          {"summary", summary},
          {"inputs", inputs},
          {"environment", environment.to_json()},
          {"ok", ok()},
          {"checks", checks}};
}

Report run_scenario(const Scenario& s, const Environment& env) {
  Report rep{s.id, s.summary, s.inputs, env, {}};
  for (const auto& c : s.checks) {
    CheckResult r{c.id, c.operation, c.expect, c.claims, {}, {}};
    try {
      r.outcome = c.body();
    } catch (const SpecError&) {
      throw;
    } catch (const Error& e) {
      r.outcome = Outcome::fail();
      r.error = e.what();
    }
    rep.results.push_back(std::move(r));
  }
  return rep;
}

json suite_json(const std::vector<Report>& reports, const Environment& env) {
  json rs = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    rs.push_back(r.to_json());
    ok = ok && r.ok();
  }
  return {{"environment", env.to_json()}, {"ok", ok}, {"reports", rs}};
}

const std::vector<std::string>& operations() {
  static const std::vector<std::string> ops = {
      "bimodule_maps",
      "build_cartan_pair",
      "cartan_vs_definitions",
      "ce_center_relations_hold",
      "ce_coboundary",
      "ce_d_is_first_order",
      "ce_duality_check",
      "ce_wedge",
      "compare_definitions",
      "composition_order_check",
      "derivations",
      "dv_first_order",
      "extend_hom",
      "factorize",
      "first_order_decomposition",
      "graded_ce_coboundary",
      "graded_derivations",
      "grothendieck_diff",
      "homspace_deltas",
      "jet_module",
      "jk_is_diffop",
      "juxtaposition_rule_holds",
      "left_jet_identity_failure",
      "lunts_filtration",
      "minimal_calculus",
      "representability",
      "two_sided_filtration",
      "two_sided_jet",
      "universal_factorize",
      "universal_forms",
      "central_relation_failure",
  };
  return ops;
}

}  // namespace ncdiff::lab
