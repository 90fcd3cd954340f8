#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncdiff/cartan.hpp"
#include "ncdiff/ce.hpp"
#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/graded_ce.hpp"
#include "ncdiff/jets.hpp"
#include "ncdiff/lab/claims.hpp"
#include "ncdiff/lab/inputs.hpp"
#include "ncdiff/lab/json.hpp"
#include "ncdiff/lab/suite.hpp"
#include "ncdiff/universal.hpp"

using namespace ncdiff;
using lab::json;
using lab::to_json;

namespace {

struct Options {
  std::string algebra;
  std::string module;
  std::string source = "regular";
  std::string target = "regular";
  std::string side = "left";
  std::string calculus = "universal";
  std::string field;
  std::string json_path;
  std::size_t order = 1;
  std::size_t max_degree = 0;
  bool graded = false;
  bool representatives = false;
  bool two_sided = false;
  bool list = false;
  std::vector<std::string> scenarios;
};

/// What a command produced: text for the terminal, a JSON document, and
/// whether every expectation held.
struct Result {
  std::vector<std::string> lines;
  json doc = json::object();
  bool ok = true;
};

std::optional<Field> field_of(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return lab::parse_field(o.field);
}

FiniteAlgebra algebra_of(const Options& o) { return lab::resolve_algebra(o.algebra, field_of(o)); }

Side side_of(const Options& o) {
  if (o.side == "left") return Side::left;
  if (o.side == "right") return Side::right;
  throw SpecError("side must be left or right");
}

std::string yes(bool b) { return b ? "yes" : "no"; }

json basis_json(const HomSpace& h, const Subspace& s) {
  json out = json::array();
  for (const auto& v : s.basis_vectors()) out.push_back(to_json(h.unflatten(v)));
  return out;
}

void print_basis(Result& r, const HomSpace& h, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i) r.lines.push_back("[" + std::to_string(i) + "]\n" + h.unflatten(s.basis_vector(i)).to_string());
}

json module_header(const Bimodule& p, const Bimodule& q) {
  return {{"source", p.name()}, {"target", q.name()}, {"algebra", p.algebra().name()}, {"field", p.field().name()}};
}

// ------------------------------------------------------------------ commands

Result check_algebra(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const ValidationReport v = a.validate();
  Result r;
  r.ok = v.ok();
  r.doc = {{"algebra", a.name()}, {"dim", a.dim()}, {"field", a.field().name()}, {"valid", v.ok()},
           {"failures", v.failures}};
  r.lines.push_back(a.name() + " over " + a.field().name() + ", dim " + std::to_string(a.dim()));
  r.lines.push_back("valid: " + yes(v.ok()));
  for (const auto& f : v.failures) r.lines.push_back("  " + f);
  if (v.ok()) {
    r.doc["commutative"] = a.is_commutative();
    r.doc["center_dim"] = a.center().dim();
    r.lines.push_back("commutative: " + yes(a.is_commutative()));
    r.lines.push_back("center dim: " + std::to_string(a.center().dim()));
    if (a.is_graded()) {
      r.doc["graded_commutative"] = a.is_graded_commutative();
      r.lines.push_back("graded commutative: " + yes(a.is_graded_commutative()));
    }
  }
  return r;
}

Result check_module(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const Bimodule p = lab::resolve_module(o.module, a);
  const ValidationReport v = p.validate();
  Result r;
  r.ok = v.ok();
  r.doc = {{"module", p.name()}, {"algebra", a.name()}, {"dim", p.dim()}, {"valid", v.ok()}, {"failures", v.failures}};
  r.lines.push_back(p.name() + " over " + a.name() + ", dim " + std::to_string(p.dim()));
  r.lines.push_back("valid: " + yes(v.ok()));
  for (const auto& f : v.failures) r.lines.push_back("  " + f);
  if (v.ok()) {
    r.doc["central"] = p.is_central();
    r.lines.push_back("central: " + yes(p.is_central()));
  }
  return r;
}

Result derivations_cmd(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const Bimodule q = lab::resolve_module(o.target, a);
  const DerivationSpace d = derivations(q, o.graded);
  Result r;
  json basis = json::array();
  r.lines.push_back("derivations " + a.name() + " -> " + q.name() + (o.graded ? " (graded)" : "") + ": dim " +
                    std::to_string(d.dim()));
  for (std::size_t i = 0; i < d.dim(); ++i) {
    basis.push_back(to_json(d.basis_map(i)));
    r.lines.push_back("[" + std::to_string(i) + "]" + (o.graded ? " parity " + std::to_string(d.parities[i]) : "") +
                      "\n" + d.basis_map(i).to_string());
  }
  r.doc = {{"algebra", a.name()}, {"target", q.name()}, {"graded", o.graded}, {"dim", d.dim()}, {"basis", basis},
           {"parities", d.parities}};
  return r;
}

Result diff_space(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const HomSpace h(lab::resolve_module(o.source, a), lab::resolve_module(o.target, a));
  const DiffSpace d = o.graded ? graded_diff(h, o.order) : grothendieck_diff(h, o.order);
  Result r;
  r.doc = module_header(h.source(), h.target());
  r.doc["definition"] = to_string(d.definition);
  r.doc["order"] = o.order;
  r.doc["hom_dim"] = h.dim();
  r.doc["dim"] = d.space.dim();
  r.doc["naive"] = d.naive;
  r.doc["basis"] = basis_json(h, d.space);
  r.lines.push_back(std::string(to_string(d.definition)) + " Diff_" + std::to_string(o.order) + ": dim " +
                    std::to_string(d.space.dim()) + " of " + std::to_string(h.dim()) +
                    (d.naive ? " (noncommutative algebra: naive condition)" : ""));
  print_basis(r, h, d.space);
  return r;
}

json filtration_json(const Filtration& f) {
  json dims = json::array();
  for (const auto& t : f.terms) dims.push_back(t.dim());
  return dims;
}

Result lunts(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const HomSpace h(lab::resolve_module(o.source, a), lab::resolve_module(o.target, a));
  const Filtration f =
      lunts_filtration(h, o.order, side_of(o), o.representatives ? LuntsForm::representatives : LuntsForm::closure);
  Result r;
  r.doc = module_header(h.source(), h.target());
  r.doc["side"] = o.side;
  r.doc["form"] = o.representatives ? "representatives" : "closure";
  r.doc["dims"] = filtration_json(f);
  r.doc["monotone"] = f.monotone();
  r.doc["basis"] = basis_json(h, f[f.top()]);
  r.ok = f.monotone();
  std::string dims;
  for (std::size_t k = 0; k < f.terms.size(); ++k) dims += " I_" + std::to_string(k) + "=" + std::to_string(f[k].dim());
  r.lines.push_back(o.side + " Lunts filtration:" + dims);
  print_basis(r, h, f[f.top()]);
  return r;
}

Result two_sided(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const HomSpace h(lab::resolve_module(o.source, a), lab::resolve_module(o.target, a));
  const TwoSidedFiltration t = two_sided_filtration(h, o.order);
  Result r;
  r.doc = module_header(h.source(), h.target());
  r.doc["dims"] = filtration_json(t.filtration);
  r.doc["zero_order_union_is_subspace"] = t.zero_order_union_is_subspace;
  r.doc["monotone"] = t.filtration.monotone();
  r.doc["basis"] = basis_json(h, t.filtration[t.filtration.top()]);
  r.ok = t.filtration.monotone();
  std::string dims;
  for (std::size_t k = 0; k < t.filtration.terms.size(); ++k)
    dims += " TS_" + std::to_string(k) + "=" + std::to_string(t.filtration[k].dim());
  r.lines.push_back("two-sided filtration:" + dims);
  r.lines.push_back("left and right zero order nested: " + yes(t.zero_order_union_is_subspace));
  return r;
}

Result ce_cmd(const Options& o) {
  const std::size_t k = o.max_degree ? o.max_degree : 3;
  const CEComplex ce(algebra_of(o), k);
  Result r;
  json dims = json::array(), dd = json::array(), pres = json::array();
  for (std::size_t i = 0; i <= k; ++i) dims.push_back(ce.forms(i).dim());
  for (std::size_t i = 0; i + 2 <= k; ++i) {
    dd.push_back(ce.dd_vanishes(i));
    r.ok = r.ok && dd.back().get<bool>();
  }
  for (std::size_t i = 0; i < k; ++i) {
    pres.push_back(ce.d_preserves_forms(i));
    r.ok = r.ok && pres.back().get<bool>();
  }
  r.doc = {{"algebra", ce.algebra().name()}, {"max_degree", k}, {"derivations", ce.derivation_dim()},
           {"form_dims", dims}, {"dd_vanishes", dd}, {"d_preserves_forms", pres}};
  r.lines.push_back(ce.algebra().name() + ": dim dA = " + std::to_string(ce.derivation_dim()) + ", O^k dims " +
                    dims.dump());
  r.lines.push_back("dd = 0: " + dd.dump() + ", d preserves forms: " + pres.dump());
  if (k >= 2) {
    const MinimalCalculus mc = minimal_calculus(ce);
    const DualityReport du = ce_duality_check(ce, mc);
    const bool center = ce_center_relations_hold(ce);
    r.ok = r.ok && du.ok() && center;
    r.doc["minimal"] = {{"o1", mc.o1.module.dim()}, {"o2", mc.o2.module.dim()}};
    r.doc["duality"] = {{"derivation_dim", du.derivation_dim}, {"hom_dim", du.hom_dim}, {"ok", du.ok()}};
    r.doc["center_relations"] = center;
    r.lines.push_back("minimal calculus: O^1 A dim " + std::to_string(mc.o1.module.dim()) + ", O^2 A dim " +
                      std::to_string(mc.o2.module.dim()));
    r.lines.push_back("duality: dA " + std::to_string(du.derivation_dim) + ", Hom(O^1 A, A) " +
                      std::to_string(du.hom_dim) + ", inverse maps " + yes(du.ok()));
    r.lines.push_back("center relations: " + yes(center));
  }
  return r;
}

Result graded_ce(const Options& o) {
  const std::size_t k = o.max_degree ? o.max_degree : 2;
  const GradedCEComplex ce(algebra_of(o), k);
  Result r;
  json dims = json::array(), cdims = json::array(), dd = json::array(), pres = json::array();
  for (std::size_t i = 0; i <= k; ++i) {
    dims.push_back(ce.linear_forms(i).dim());
    cdims.push_back(ce.cochain_dim(i));
  }
  for (std::size_t i = 0; i + 2 <= k; ++i) {
    dd.push_back(ce.dd_vanishes(i));
    r.ok = r.ok && dd.back().get<bool>();
  }
  for (std::size_t i = 0; i < k; ++i) {
    pres.push_back(ce.d_preserves_forms(i));
    r.ok = r.ok && pres.back().get<bool>();
  }
  json par = json::array();
  for (std::size_t l = 0; l < ce.derivation_dim(); ++l) par.push_back(ce.derivation_parity(l));
  r.doc = {{"algebra", ce.algebra().name()}, {"max_degree", k}, {"derivation_parities", par},
           {"cochain_dims", cdims}, {"form_dims", dims}, {"dd_vanishes", dd}, {"d_preserves_forms", pres}};
  r.lines.push_back(ce.algebra().name() + ": graded derivations " + std::to_string(ce.derivation_dim()) +
                    ", cochain dims " + cdims.dump() + ", linear form dims " + dims.dump());
  r.lines.push_back("dd = 0: " + dd.dump() + ", d preserves forms: " + pres.dump());
  return r;
}

Result universal_cmd(const Options& o) {
  const UniversalForms u = universal_forms(algebra_of(o));
  const ValidationReport v = u.calculus.validate();
  const bool ker = u.omega1 == u.kernel_m, jux = juxtaposition_rule_holds(u), rel = universal_relation_holds(u);
  Result r;
  r.ok = ker && v.ok() && jux && rel;
  r.doc = {{"algebra", u.algebra.name()}, {"omega1", u.omega1.dim()},        {"omega2", u.omega2.dim()},
           {"omega1_is_kernel", ker},      {"dga_failures", v.failures},      {"juxtaposition", jux},
           {"relation", rel}};
  r.lines.push_back(u.algebra.name() + ": Omega^1 dim " + std::to_string(u.omega1.dim()) + ", Omega^2 dim " +
                    std::to_string(u.omega2.dim()));
  r.lines.push_back("Omega^1 = ker m: " + yes(ker) + ", DGA axioms: " + yes(v.ok()) + ", juxtaposition: " + yes(jux) +
                    ", (da)b = d(ab) - a db: " + yes(rel));
  if (u.algebra.is_commutative()) {
    const auto w = central_relation_failure(u);
    if (w) {
      r.doc["central_relation_witness"] = {{"a", to_json(w->a)}, {"a2", to_json(w->a2)}, {"difference", to_json(w->difference)}};
      r.lines.push_back("a da' != (da') a at a = " + w->a.to_string() + ", a' = " + w->a2.to_string() +
                        ", difference " + w->difference.to_string());
    } else {
      r.doc["central_relation_witness"] = nullptr;
      r.lines.push_back("a da' = (da') a on all central basis pairs");
    }
  }
  return r;
}

Result cartan_cmd(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  Bimodule q;
  Matrix d;
  if (o.calculus == "universal") {
    const UniversalForms u = universal_forms(a);
    q = u.calculus.omega1;
    d = u.calculus.d0;
  } else if (o.calculus == "ce") {
    const CEComplex ce(a, 2);
    const MinimalCalculus mc = minimal_calculus(ce);
    q = mc.o1.module;
    d = mc.d0;
  } else {
    throw SpecError("calculus must be universal or ce");
  }
  const CartanPair pair = build_cartan_pair(q, d, side_of(o));
  const CartanReport rep = cartan_vs_definitions(pair);
  Result r;
  const bool rel = pair.relations_hold();
  r.ok = rel && rep.two_sided_dv;
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json j = {{"derivation", e.derivation}, {"dv_first_order", e.dv_first_order}, {"lunts_left1", e.lunts_left1},
              {"lunts_right1", e.lunts_right1}};
    if (e.grothendieck1) j["grothendieck1"] = *e.grothendieck1;
    entries.push_back(j);
  }
  r.doc = {{"algebra", a.name()},      {"calculus", o.calculus},          {"side", o.side},
           {"relations_hold", rel},    {"dual_dim", rep.dual_dim},        {"two_sided_dim", rep.two_sided_dim},
           {"two_sided_dv", rep.two_sided_dv}, {"entries", entries}};
  r.lines.push_back(o.side + " Cartan pair on " + o.calculus + " calculus of " + a.name() + ": dual dim " +
                    std::to_string(rep.dual_dim) + ", relations " + yes(rel));
  for (std::size_t i = 0; i < rep.entries.size(); ++i) {
    const auto& e = rep.entries[i];
    r.lines.push_back("  u" + std::to_string(i) + ": derivation " + yes(e.derivation) + ", dv " +
                      yes(e.dv_first_order) + ", Lunts I_1 left " + yes(e.lunts_left1) + " right " +
                      yes(e.lunts_right1));
  }
  r.lines.push_back("two-sided dual dim " + std::to_string(rep.two_sided_dim) + ", all hats dv: " +
                    yes(rep.two_sided_dv));
  if (rep.witness) {
    const DvWitness& w = *rep.witness;
    r.doc["witness"] = {{"dual_index", w.dual_index}, {"a", w.a}, {"b", w.b}, {"p", w.p}, {"value", to_json(w.value)}};
    r.lines.push_back("witness: u" + std::to_string(w.dual_index) + " at (a, b, p) = (" + std::to_string(w.a) + ", " +
                      std::to_string(w.b) + ", " + std::to_string(w.p) + ") value " + w.value.to_string());
  }
  return r;
}

Result jets_cmd(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const Bimodule p = lab::resolve_module(o.source, a), q = lab::resolve_module(o.target, a);
  const JetModule jm = o.two_sided ? two_sided_jet(p) : jet_module(p, o.order);
  const Representability rep = representability(jm, q);
  const bool diffop = jk_is_diffop(jm);
  Result r;
  r.ok = rep.ok() && diffop;
  r.doc = module_header(p, q);
  r.doc["two_sided"] = jm.two_sided;
  r.doc["order"] = jm.order;
  r.doc["ambient_dim"] = jm.mu.ambient_dim();
  r.doc["mu_dim"] = jm.mu.dim();
  r.doc["jet_dim"] = jm.dim();
  r.doc["j"] = to_json(jm.j);
  r.doc["j_is_diffop"] = diffop;
  r.doc["representability"] = {{"hom_dim", rep.hom_dim},
                               {"diff_dim", rep.diff_dim},
                               {"diff_roundtrip", rep.diff_roundtrip},
                               {"hom_roundtrip", rep.hom_roundtrip}};
  r.lines.push_back(std::string(jm.two_sided ? "two-sided " : "") + "J^" + std::to_string(jm.order) + "(" + p.name() +
                    "): ambient " + std::to_string(jm.mu.ambient_dim()) + ", mu " + std::to_string(jm.mu.dim()) +
                    ", jet dim " + std::to_string(jm.dim()));
  r.lines.push_back("J is a differential operator: " + yes(diffop));
  r.lines.push_back("Hom(J, " + q.name() + ") dim " + std::to_string(rep.hom_dim) + ", operators dim " +
                    std::to_string(rep.diff_dim) + ", inverse correspondences " +
                    yes(rep.diff_roundtrip && rep.hom_roundtrip));
  return r;
}

Result compare_defs(const Options& o) {
  const FiniteAlgebra a = algebra_of(o);
  const HomSpace h(lab::resolve_module(o.source, a), lab::resolve_module(o.target, a));
  const Comparison c = compare_definitions(h, o.order);
  Result r;
  json dims = json::object(), rel = json::array(), wit = json::array();
  for (std::size_t i = 0; i < c.names.size(); ++i) {
    dims[c.names[i]] = c.spaces[i].dim();
    json row = json::array();
    for (std::size_t j = 0; j < c.names.size(); ++j) {
      row.push_back(to_string(c.relation[i][j]));
      if (c.witness[i][j])
        wit.push_back({{"inside", c.names[i]}, {"outside", c.names[j]}, {"operator", to_json(h.unflatten(*c.witness[i][j]))}});
    }
    rel.push_back(row);
  }
  r.doc = module_header(h.source(), h.target());
  r.doc["order"] = o.order;
  r.doc["names"] = c.names;
  r.doc["dims"] = dims;
  r.doc["relation"] = rel;
  r.doc["witnesses"] = wit;
  r.doc["all_equal"] = c.all_equal();
  r.doc["union_is_subspace"] = c.union_is_subspace;
  r.lines.push_back("order " + std::to_string(o.order) + " on Hom(" + h.source().name() + ", " + h.target().name() +
                    "), dim " + std::to_string(h.dim()));
  for (std::size_t i = 0; i < c.names.size(); ++i) {
    std::string line = "  " + c.names[i] + " (" + std::to_string(c.spaces[i].dim()) + "):";
    for (std::size_t j = 0; j < c.names.size(); ++j)
      if (i != j) line += " " + std::string(to_string(c.relation[i][j])) + " " + c.names[j] + ";";
    r.lines.push_back(line);
  }
  r.lines.push_back("all equal: " + yes(c.all_equal()));
  return r;
}

Result run_scenarios(const Options& o) {
  const Field f = field_of(o).value_or(Field::rationals());
  Result r;
  if (o.list) {
    for (const auto& id : lab::scenario_ids()) r.lines.push_back(id);
    json ids = lab::scenario_ids();
    r.doc = {{"scenarios", ids}};
    return r;
  }
  std::vector<lab::Scenario> todo;
  if (o.scenarios.empty()) {
    todo = lab::builtin_suite(f);
  } else {
    for (const auto& id : o.scenarios) {
      auto s = lab::find_scenario(id, f);
      if (!s) throw SpecError("unknown scenario " + id);
      todo.push_back(std::move(*s));
    }
  }
  lab::Environment env;
  env.field = f.name();
  std::vector<lab::Report> reports;
  for (const auto& s : todo) {
    reports.push_back(lab::run_scenario(s, env));
    const lab::Report& rep = reports.back();
    r.lines.push_back(rep.scenario + ": " + (rep.ok() ? "ok" : "FAILED"));
    for (const auto& c : rep.results)
      r.lines.push_back("  " + c.outcome.status + "  " + c.id + (c.error.empty() ? "" : "  (" + c.error + ")"));
    r.ok = r.ok && rep.ok();
  }
  r.doc = lab::suite_json(reports, env);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differential operators over finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;
  std::function<Result(const Options&)> action;

  auto common = [&](CLI::App* sub, std::function<Result(const Options&)> fn) {
    sub->add_option("--json", o.json_path, "Write the report as canonical JSON");
    sub->add_option("--field", o.field, "Ground field: q or p:PRIME (overrides the input file)");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto with_algebra = [&](CLI::App* sub) {
    sub->add_option("algebra", o.algebra, "Algebra spec path or catalog:NAME[:PARAM]")->required();
  };
  auto with_modules = [&](CLI::App* sub) {
    sub->add_option("--source", o.source, "Source module: regular, free:K, zero, char:L/R or a path");
    sub->add_option("--target", o.target, "Target module");
  };

  auto* ca = common(app.add_subcommand("check-algebra", "Validate an algebra spec"), check_algebra);
  with_algebra(ca);
  auto* cm = common(app.add_subcommand("check-module", "Validate a bimodule spec"), check_module);
  with_algebra(cm);
  cm->add_option("module", o.module, "Module spec")->required();
  auto* de = common(app.add_subcommand("derivations", "Basis of derivations into a bimodule"), derivations_cmd);
  with_algebra(de);
  de->add_option("--target", o.target, "Target module");
  de->add_flag("--graded", o.graded, "Graded Leibniz rule");
  auto* ds = common(app.add_subcommand("diff-space", "Grothendieck differential operators of order k"), diff_space);
  with_algebra(ds);
  with_modules(ds);
  ds->add_option("--order", o.order, "Order k");
  ds->add_flag("--graded", o.graded, "Graded deltas");
  auto* lu = common(app.add_subcommand("lunts", "Lunts filtration up to order k"), lunts);
  with_algebra(lu);
  with_modules(lu);
  lu->add_option("--order", o.order, "Top order");
  lu->add_option("--side", o.side, "left or right");
  lu->add_flag("--representatives", o.representatives, "Use the representatives form");
  auto* ts = common(app.add_subcommand("two-sided", "Two-sided filtration up to order k"), two_sided);
  with_algebra(ts);
  with_modules(ts);
  ts->add_option("--order", o.order, "Top order");
  auto* ce = common(app.add_subcommand("ce", "Chevalley-Eilenberg calculus"), ce_cmd);
  with_algebra(ce);
  ce->add_option("--max-degree", o.max_degree, "Top cochain degree (default 3)");
  auto* gce = common(app.add_subcommand("graded-ce", "Graded Chevalley-Eilenberg complex"), graded_ce);
  with_algebra(gce);
  gce->add_option("--max-degree", o.max_degree, "Top cochain degree (default 2, at most 3)");
  auto* un = common(app.add_subcommand("universal", "Universal differential calculus"), universal_cmd);
  with_algebra(un);
  auto* cp = common(app.add_subcommand("cartan", "Cartan pair vector fields against the definitions"), cartan_cmd);
  with_algebra(cp);
  cp->add_option("--side", o.side, "left or right");
  cp->add_option("--calculus", o.calculus, "universal or ce");
  auto* je = common(app.add_subcommand("jets", "Jet module and representability"), jets_cmd);
  with_algebra(je);
  with_modules(je);
  je->add_option("--order", o.order, "Jet order (at most 2)");
  je->add_flag("--two-sided", o.two_sided, "Two-sided first jets");
  auto* cd = common(app.add_subcommand("compare-defs", "Inclusions between the definitions at one order"), compare_defs);
  with_algebra(cd);
  with_modules(cd);
  cd->add_option("--order", o.order, "Order k");
  auto* rs = common(app.add_subcommand("run-scenarios", "Run the built-in scenario suite"), run_scenarios);
  rs->add_option("--scenario", o.scenarios, "Scenario id (repeatable); default all");
  rs->add_flag("--list", o.list, "List scenario ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Result r = action(o);
    for (const auto& line : r.lines) std::cout << line << "\n";
    if (!o.json_path.empty()) {
      std::ofstream out(o.json_path, std::ios::binary);
      if (!out) throw SpecError("cannot write " + o.json_path);
      out << lab::canonical(r.doc);
    }
    return r.ok ? 0 : 1;
  } catch (const SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
