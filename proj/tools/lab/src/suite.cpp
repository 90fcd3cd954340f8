#include "ncdiff/lab/suite.hpp"

#include <functional>
#include <memory>
#include <random>
#include <tuple>

#include "ncdiff/cartan.hpp"
#include "ncdiff/ce.hpp"
#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/graded_ce.hpp"
#include "ncdiff/jets.hpp"
#include "ncdiff/lab/inputs.hpp"
#include "ncdiff/universal.hpp"

namespace ncdiff::lab {

namespace {

constexpr std::size_t kCeDegree = 4;
constexpr std::size_t kGradedCeDegree = 4;
constexpr std::uint32_t kSeed = 20240611;

template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> make) : state_(std::make_shared<State>(State{std::move(make), {}})) {}
  const T& get() const {
    if (!state_->value) state_->value.emplace(state_->make());
    return *state_->value;
  }

 private:
  struct State {
    std::function<T()> make;
    std::optional<T> value;
  };
  std::shared_ptr<State> state_;
};

Check make(std::string id, std::string op, Expect e, std::vector<std::string> claims, std::function<Outcome()> body) {
  return Check{std::move(id), std::move(op), e, std::move(claims), std::move(body)};
}

Outcome witness(json data) { return {true, "witness", std::move(data)}; }

Vector random_member(const Subspace& s, std::mt19937& rng) {
  Vector c(s.field(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) c.set(i, mpq_class(static_cast<long>(rng() % 7) - 3));
  return s.from_coordinates(c);
}

const std::vector<std::string>& commutative_trio() {
  static const std::vector<std::string> v = {"catalog:trunc_poly:3", "catalog:trunc_xy", "catalog:group_algebra:3"};
  return v;
}

const std::vector<std::string>& catalog_entries() {
  static const std::vector<std::string> v = {"catalog:scalar",      "catalog:trunc_poly:2",      "catalog:trunc_poly:3",
                                             "catalog:trunc_xy",    "catalog:group_algebra:3",   "catalog:matrix:2",
                                             "catalog:quaternions", "catalog:upper_triangular:2"};
  return v;
}

const std::vector<std::string>& commutative_entries() {
  static const std::vector<std::string> v = {"catalog:scalar", "catalog:trunc_poly:2", "catalog:trunc_poly:3",
                                             "catalog:trunc_xy", "catalog:group_algebra:3"};
  return v;
}

std::string label(const std::string& spec) { return spec.rfind("catalog:", 0) == 0 ? spec.substr(8) : spec; }

// ---------------------------------------------------------------- collapse

Scenario commutative_collapse(const Field& f) {
  Scenario s{"commutative-collapse", "definitions of differential operators agree over commutative algebras",
             commutative_trio(), {}};
  for (const auto& spec : commutative_trio()) {
    const std::string l = label(spec);
    s.checks.push_back(make("decomposition/" + l, "first_order_decomposition", Expect::equality,
                            {"commutative-decomposition"}, [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const Bimodule reg = regular_bimodule(a);
                              const HomSpace h(reg, reg);
                              const Subspace diff1 = grothendieck_diff(h, 1).space;
                              const DerivationSpace der = derivations(a);
                              const FirstOrderSplit sp = first_order_decomposition(h, diff1, SplitFlavor::commutative);
                              const std::size_t meet = intersect(sp.zero_order, der.space).dim();
                              const bool ok = sp.ok() && diff1.dim() == a.dim() + der.dim() &&
                                              sp.derivation_part == der.space && meet == 0;
                              return Outcome::check(ok, {{"diff1", diff1.dim()},
                                                         {"algebra", a.dim()},
                                                         {"derivations", der.dim()},
                                                         {"intersection", meet},
                                                         {"spans", sp.spans}});
                            }));
    s.checks.push_back(make("collapse/" + l, "lunts_filtration", Expect::equality, {"lunts-reduces-commutative"},
                            [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const Bimodule reg = regular_bimodule(a);
                              const HomSpace h(reg, reg);
                              const Filtration g = grothendieck_chain(h, 2);
                              const Filtration ll = lunts_filtration(h, 2, Side::left);
                              const Filtration lr = lunts_filtration(h, 2, Side::left, LuntsForm::representatives);
                              const Filtration rr = lunts_filtration(h, 2, Side::right);
                              const Filtration ts = two_sided_filtration(h, 2).filtration;
                              bool ok = true;
                              json orders = json::array();
                              for (std::size_t k = 0; k <= 2; ++k) {
                                const bool eq = g[k] == ll[k] && g[k] == lr[k] && g[k] == rr[k] && g[k] == ts[k];
                                ok = ok && eq;
                                orders.push_back({{"order", k},
                                                  {"grothendieck", g[k].dim()},
                                                  {"lunts_left", ll[k].dim()},
                                                  {"lunts_left_representatives", lr[k].dim()},
                                                  {"lunts_right", rr[k].dim()},
                                                  {"two_sided", ts[k].dim()},
                                                  {"equal", eq}});
                              }
                              return Outcome::check(ok, {{"orders", orders}});
                            }));
    s.checks.push_back(make("definitions/" + l, "compare_definitions", Expect::equality,
                            {"definitions-coincide-commutative"}, [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const Bimodule reg = regular_bimodule(a);
                              const Comparison c = compare_definitions(HomSpace(reg, reg), 1);
                              json dims = json::object();
                              for (std::size_t i = 0; i < c.names.size(); ++i) dims[c.names[i]] = c.spaces[i].dim();
                              return Outcome::check(c.all_equal(), {{"dims", dims}});
                            }));
    s.checks.push_back(make("dv-central/" + l, "dv_first_order", Expect::equality, {"dv-reduces-commutative"},
                            [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const std::vector<std::pair<std::string, std::string>> pairs = {
                                  {"regular", "regular"}, {"regular", "free:2"}, {"free:2", "regular"}};
                              bool ok = true;
                              json rows = json::array();
                              for (const auto& [ps, qs] : pairs) {
                                const HomSpace h(resolve_module(ps, a), resolve_module(qs, a));
                                const Subspace dv = dv_first_order(h).space;
                                const Subspace g = grothendieck_diff(h, 1).space;
                                ok = ok && dv == g;
                                rows.push_back({{"source", ps},
                                                {"target", qs},
                                                {"dv", dv.dim()},
                                                {"grothendieck", g.dim()},
                                                {"equal", dv == g}});
                              }
                              return Outcome::check(ok, {{"pairs", rows}});
                            }));
  }
  return s;
}

// ---------------------------------------------------------------- dilemma M2

Scenario dilemma_m2(const Field& f) {
  const std::string spec = "catalog:matrix:2";
  Scenario s{"dilemma-M2", "the definitions separate over the matrix algebra M_2", {spec}, {}};

  s.checks.push_back(make("derivation-not-naive", "grothendieck_diff", Expect::witness_required,
                          {"derivation-not-naive"}, [spec, f] {
                            const FiniteAlgebra a = resolve_algebra(spec, f);
                            const Bimodule reg = regular_bimodule(a);
                            const HomSpace h(reg, reg);
                            const DiffSpace naive = grothendieck_diff(h, 1);
                            const Filtration l = lunts_filtration(h, 1, Side::left);
                            const DerivationSpace der = derivations(a);
                            json flags = json::array();
                            json found;
                            for (std::size_t i = 0; i < der.dim(); ++i) {
                              const Vector v = der.space.basis_vector(i);
                              const bool in_naive = naive.space.contains(v), in_l1 = l[1].contains(v);
                              flags.push_back({{"index", i}, {"naive_order1", in_naive}, {"lunts_left1", in_l1}});
                              if (!found.is_null() || in_naive || !in_l1) continue;
                              for (std::size_t x = 0; x < a.dim() && found.is_null(); ++x)
                                for (std::size_t y = 0; y < a.dim() && found.is_null(); ++y) {
                                  const Vector w = h.deltas()[x].apply(h.deltas()[y].apply(v));
                                  if (!w.is_zero())
                                    found = {{"derivation", to_json(der.basis_map(i))},
                                             {"a", x},
                                             {"b", y},
                                             {"delta_a_delta_b", to_json(h.unflatten(w))}};
                                }
                            }
                            json data = {{"derivations", der.dim()},
                                         {"naive_order1_dim", naive.space.dim()},
                                         {"lunts_left1_dim", l[1].dim()},
                                         {"basis", flags}};
                            if (found.is_null()) return Outcome::fail(data);
                            data["witness"] = found;
                            return witness(data);
                          }));

  s.checks.push_back(make("cartan-fails-dv", "cartan_vs_definitions", Expect::witness_required, {"cartan-fails-dv"},
                          [spec, f] {
                            const FiniteAlgebra a = resolve_algebra(spec, f);
                            const UniversalForms u = universal_forms(a);
                            const CartanPair pair = build_cartan_pair(u.calculus.omega1, u.calculus.d0, Side::right);
                            const CartanReport r = cartan_vs_definitions(pair);
                            std::size_t der = 0, dv = 0, l1 = 0, r1 = 0;
                            for (const auto& e : r.entries) {
                              der += e.derivation;
                              dv += e.dv_first_order;
                              l1 += e.lunts_left1;
                              r1 += e.lunts_right1;
                            }
                            json data = {{"calculus", "universal"},
                                         {"side", "right"},
                                         {"dual_dim", r.dual_dim},
                                         {"relations_hold", pair.relations_hold()},
                                         {"hats_derivation", der},
                                         {"hats_dv_first_order", dv},
                                         {"hats_lunts_left1", l1},
                                         {"hats_lunts_right1", r1}};
                            if (!r.witness || !pair.relations_hold()) return Outcome::fail(data);
                            const DvWitness& w = *r.witness;
                            data["witness"] = {{"dual_index", w.dual_index},
                                               {"a", w.a},
                                               {"b", w.b},
                                               {"p", w.p},
                                               {"value", to_json(w.value)},
                                               {"hat", to_json(pair.hat_basis(w.dual_index))}};
                            return witness(data);
                          }));

  s.checks.push_back(make("cartan-two-sided", "cartan_vs_definitions", Expect::holds, {"cartan-two-sided"},
                          [spec, f] {
                            const FiniteAlgebra a = resolve_algebra(spec, f);
                            const UniversalForms u = universal_forms(a);
                            bool ok = true;
                            json sides = json::array();
                            for (Side side : {Side::right, Side::left}) {
                              const CartanPair pair = build_cartan_pair(u.calculus.omega1, u.calculus.d0, side);
                              const CartanReport r = cartan_vs_definitions(pair);
                              ok = ok && r.two_sided_dv && r.two_sided_dim > 0;
                              sides.push_back({{"side", side == Side::right ? "right" : "left"},
                                               {"dual_dim", r.dual_dim},
                                               {"two_sided_dim", r.two_sided_dim},
                                               {"two_sided_dv", r.two_sided_dv}});
                            }
                            return Outcome::check(ok, {{"sides", sides}});
                          }));

  s.checks.push_back(make("dv-outside-lunts", "lunts_filtration", Expect::witness_or_negative, {"dv-outside-lunts"},
                          [spec, f] {
                            const FiniteAlgebra a = resolve_algebra(spec, f);
                            const Bimodule reg = regular_bimodule(a);
                            const std::vector<std::pair<std::string, Bimodule>> mods = {
                                {"regular", reg},
                                {"free:2", free_module(a, 2)},
                                {"A(x)A outer", tensor_A_P(reg).outer}};
                            json searched = json::array();
                            json found;
                            for (const auto& [pn, p] : mods)
                              for (const auto& [qn, q] : mods) {
                                const HomSpace h(p, q);
                                const Subspace dv = dv_first_order(h).space;
                                const Subspace l1 = lunts_filtration(h, 1, Side::left)[1];
                                const auto w = witness_outside(dv, l1);
                                searched.push_back({{"source", pn},
                                                    {"target", qn},
                                                    {"hom_dim", h.dim()},
                                                    {"dv_dim", dv.dim()},
                                                    {"lunts_left1_dim", l1.dim()},
                                                    {"relation", to_string(compare(dv, l1))}});
                                if (w && found.is_null())
                                  found = {{"source", pn}, {"target", qn}, {"operator", to_json(h.unflatten(*w))}};
                              }
                            json data = {{"searched", searched}};
                            if (!found.is_null()) {
                              data["witness"] = found;
                              return witness(data);
                            }
                            data["note"] = "no dv operator outside left Lunts I_1 on any listed pair";
                            return Outcome{true, "negative", data};
                          }));

  s.checks.push_back(make("left-jet-fails", "left_jet_identity_failure", Expect::witness_required, {"left-jet-fails"},
                          [spec, f] {
                            const FiniteAlgebra a = resolve_algebra(spec, f);
                            const Bimodule reg = regular_bimodule(a);
                            const bool k0_holds = !left_jet_identity_failure(reg, reg, 0).has_value();
                            const auto w = left_jet_identity_failure(reg, reg, 1);
                            json data = {{"order0_holds", k0_holds}};
                            if (!w || !k0_holds) return Outcome::fail(data);
                            data["witness"] = {{"order", 1},
                                               {"f", to_json(w->f)},
                                               {"b", w->b},
                                               {"p", w->p},
                                               {"difference", to_json(w->difference)}};
                            return witness(data);
                          }));

  auto compositions = [spec, f](bool two_sided) {
    const FiniteAlgebra a = resolve_algebra(spec, f);
    const Bimodule reg = regular_bimodule(a);
    const HomSpace h(reg, reg);
    const DerivationSpace der = derivations(a);
    std::vector<std::pair<std::string, Filtration>> filts;
    if (two_sided) {
      filts.emplace_back("two_sided", two_sided_filtration(h, 2).filtration);
    } else {
      filts.emplace_back("lunts_left", lunts_filtration(h, 2, Side::left));
      filts.emplace_back("lunts_right", lunts_filtration(h, 2, Side::right));
    }
    bool ok = der.dim() > 0;
    json rows = json::array();
    for (const auto& [name, fl] : filts) {
      std::size_t singles = 0, pairs = 0;
      for (std::size_t i = 0; i < der.dim(); ++i) {
        singles += fl[1].contains(der.space.basis_vector(i));
        for (std::size_t j = 0; j < der.dim(); ++j)
          pairs += fl[2].contains(h.flatten(der.basis_map(i) * der.basis_map(j)));
      }
      ok = ok && singles == der.dim() && pairs == der.dim() * der.dim();
      rows.push_back({{"filtration", name},
                      {"order1_dim", fl[1].dim()},
                      {"order2_dim", fl[2].dim()},
                      {"derivations_in_order1", singles},
                      {"composites_in_order2", pairs}});
    }
    return Outcome::check(ok, {{"derivations", der.dim()}, {"filtrations", rows}});
  };
  s.checks.push_back(make("derivation-compositions-lunts", "lunts_filtration", Expect::inclusion,
                          {"derivation-compositions-lunts"}, [compositions] { return compositions(false); }));
  s.checks.push_back(make("derivation-compositions-two-sided", "two_sided_filtration", Expect::inclusion,
                          {"derivation-compositions-two-sided"}, [compositions] { return compositions(true); }));

  s.checks.push_back(make("delta-commute", "homspace_deltas", Expect::holds, {"delta-commute"}, [spec, f] {
    const FiniteAlgebra a = resolve_algebra(spec, f);
    bool ok = true;
    json rows = json::array();
    for (const std::string ps : {"regular", "free:2"}) {
      const HomSpace h(resolve_module(ps, a), regular_bimodule(a));
      std::size_t checked = 0;
      for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y) {
          const SparseMatrix c = h.deltas()[x] * h.bar_deltas()[y] - h.bar_deltas()[y] * h.deltas()[x];
          ok = ok && c.is_zero();
          ++checked;
        }
      rows.push_back({{"source", ps}, {"target", "regular"}, {"pairs", checked}});
    }
    return Outcome::check(ok, {{"homspaces", rows}});
  }));
  return s;
}

// ---------------------------------------------------------------- dilemma T2

Scenario dilemma_t2(const Field& f) {
  const std::string spec = "catalog:upper_triangular:2";
  const std::string s12 = "char:1,0,0/0,0,1";
  Scenario s{"dilemma-T2", "character bimodules over upper triangular matrices", {spec, s12}, {}};
  for (const auto& [pn, qn] : std::vector<std::pair<std::string, std::string>>{{s12, "regular"}, {"regular", s12}}) {
    const std::string id = "dv-outside-lunts/" + std::string(pn == s12 ? "S12->regular" : "regular->S12");
    s.checks.push_back(make(id, "lunts_filtration", Expect::witness_required, {"dv-outside-lunts"}, [spec, f, pn, qn] {
      const FiniteAlgebra a = resolve_algebra(spec, f);
      const HomSpace h(resolve_module(pn, a), resolve_module(qn, a));
      const Subspace dv = dv_first_order(h).space;
      const Subspace l1 = lunts_filtration(h, 1, Side::left)[1];
      const auto w = witness_outside(dv, l1);
      json data = {{"source", pn},
                   {"target", qn},
                   {"hom_dim", h.dim()},
                   {"dv_dim", dv.dim()},
                   {"lunts_left1_dim", l1.dim()},
                   {"relation", to_string(compare(dv, l1))}};
      if (!w) return Outcome::fail(data);
      data["witness"] = to_json(h.unflatten(*w));
      return witness(data);
    }));
  }
  return s;
}

// ---------------------------------------------------------------- CE calculus

Scenario ce_calculus_scenario(const Field& f) {
  Scenario s{"ce-calculus", "the Chevalley-Eilenberg calculus on the catalog", catalog_entries(), {}};
  std::vector<std::pair<std::string, Lazy<CEComplex>>> ces;
  for (const auto& spec : catalog_entries())
    ces.emplace_back(spec, Lazy<CEComplex>([spec, f] { return CEComplex(resolve_algebra(spec, f), kCeDegree); }));
  auto find = [ces](const std::string& spec) {
    for (const auto& [k, v] : ces)
      if (k == spec) return v;
    throw InvalidArgument("unknown algebra " + spec);
  };

  for (const auto& [spec, ce] : ces) {
    const std::string l = label(spec);
    s.checks.push_back(make("coboundary/" + l, "ce_coboundary", Expect::holds, {"ce-dd-zero"}, [ce] {
      const CEComplex& c = ce.get();
      bool ok = true;
      json dims = json::array(), dd = json::array(), pres = json::array();
      for (std::size_t k = 0; k <= c.max_degree(); ++k) dims.push_back(c.forms(k).dim());
      for (std::size_t k = 0; k + 2 <= c.max_degree(); ++k) {
        dd.push_back(c.dd_vanishes(k));
        ok = ok && dd.back().get<bool>();
      }
      for (std::size_t k = 0; k < c.max_degree(); ++k) {
        pres.push_back(c.d_preserves_forms(k));
        ok = ok && pres.back().get<bool>();
      }
      return Outcome::check(ok, {{"derivations", c.derivation_dim()},
                                 {"form_dims", dims},
                                 {"dd_vanishes", dd},
                                 {"d_preserves_forms", pres}});
    }));
    s.checks.push_back(make("da-evaluates/" + l, "ce_coboundary", Expect::holds, {"ce-da-evaluates"}, [ce] {
      const CEComplex& c = ce.get();
      const FiniteAlgebra& a = c.algebra();
      bool ok = true;
      for (std::size_t i = 0; i < a.dim(); ++i) {
        const Vector da = c.da(a.basis(i));
        for (std::size_t u = 0; u < c.derivation_dim(); ++u)
          ok = ok && c.evaluate(da, {u}) == c.derivation_basis()[u] * a.basis(i);
      }
      return Outcome::check(ok, {{"elements", a.dim()}, {"derivations", c.derivation_dim()}});
    }));
    s.checks.push_back(make("d-unit/" + l, "ce_coboundary", Expect::holds, {"ce-d-unit"}, [ce] {
      const CEComplex& c = ce.get();
      return Outcome::check(c.da(c.algebra().unit()).is_zero());
    }));
    s.checks.push_back(make("center-relations/" + l, "ce_center_relations_hold", Expect::holds,
                            {"ce-center-commute", "ce-center-anticommute"}, [ce] {
                              const CEComplex& c = ce.get();
                              return Outcome::check(ce_center_relations_hold(c),
                                                    {{"center_dim", c.algebra().center().dim()}});
                            }));
    s.checks.push_back(make("d-first-order/" + l, "ce_d_is_first_order", Expect::holds, {"ce-d-first-order"}, [ce] {
      const CEComplex& c = ce.get();
      const MinimalCalculus mc = minimal_calculus(c);
      bool ok = true;
      json data = json::object();
      json dv = json::array();
      for (std::size_t k = 0; k <= 1; ++k) {
        dv.push_back(ce_d_is_dv_first_order(c, mc, k));
        ok = ok && dv.back().get<bool>();
      }
      data["dv_first_order"] = dv;
      if (c.algebra().is_commutative()) {
        json g = json::array();
        for (std::size_t k = 0; k + 1 <= c.max_degree(); ++k) {
          g.push_back(ce_d_is_first_order(c, k));
          ok = ok && g.back().get<bool>();
        }
        data["grothendieck_first_order"] = g;
      }
      return Outcome::check(ok, data);
    }));
    s.checks.push_back(make("graded-commutative/" + l, "ce_wedge", Expect::holds, {"ce-graded-commutative"}, [ce] {
      const CEComplex& c = ce.get();
      if (!c.algebra().is_commutative()) return Outcome{true, "skipped", {{"reason", "noncommutative"}}};
      bool ok = true;
      std::size_t pairs = 0;
      for (std::size_t r = 0; r <= 2; ++r)
        for (std::size_t t = 0; t <= 2; ++t)
          for (const auto& phi : c.forms(r).basis_vectors())
            for (const auto& psi : c.forms(t).basis_vectors()) {
              Vector rhs = c.wedge(psi, t, phi, r);
              if ((r * t) % 2 == 1) rhs = -rhs;
              ok = ok && c.wedge(phi, r, psi, t) == rhs;
              ++pairs;
            }
      return Outcome::check(ok, {{"basis_pairs", pairs}});
    }));
  }

  s.checks.push_back(make("wedge-leibniz", "ce_wedge", Expect::holds, {"ce-wedge-leibniz"}, [find] {
    const std::vector<std::string> pool = {"catalog:trunc_xy", "catalog:matrix:2", "catalog:quaternions",
                                           "catalog:upper_triangular:2"};
    std::mt19937 rng(kSeed);
    std::size_t bad = 0;
    json per = json::object();
    for (std::size_t i = 0; i < 100; ++i) {
      const std::string& spec = pool[i % pool.size()];
      const CEComplex& c = find(spec).get();
      const std::size_t r = rng() % 3, t = rng() % (4 - r);
      const Vector phi = random_member(c.forms(r), rng), psi = random_member(c.forms(t), rng);
      Vector rhs = c.wedge(c.d(phi, r), r + 1, psi, t);
      const Vector second = c.wedge(phi, r, c.d(psi, t), t + 1);
      rhs = r % 2 ? rhs - second : rhs + second;
      if (!(c.d(c.wedge(phi, r, psi, t), r + t) == rhs)) ++bad;
      per[label(spec)] = per.value(label(spec), 0) + 1;
    }
    return Outcome::check(bad == 0, {{"pairs", 100}, {"failures", bad}, {"per_algebra", per}, {"seed", kSeed}});
  }));

  s.checks.push_back(make("central-relation-contrast", "central_relation_failure", Expect::witness_required,
                          {"universal-universal-central-relation-fails", "ce-center-commute"}, [f] {
                            const FiniteAlgebra a = resolve_algebra("catalog:trunc_poly:2", f);
                            const bool ce_holds = ce_center_relations_hold(CEComplex(a, 2));
                            const auto w = central_relation_failure(universal_forms(a));
                            json data = {{"ce_relation_holds", ce_holds}};
                            if (!w) return Outcome::fail(data);
                            Vector expected(a.field(), 4);
                            expected.set(3, 2);
                            data["witness"] = {{"a", to_json(w->a)},
                                               {"a2", to_json(w->a2)},
                                               {"difference", to_json(w->difference)}};
                            data["difference_is_2x(x)x"] = w->difference == expected;
                            return Outcome{ce_holds && w->difference == expected, "witness", data};
                          }));
  return s;
}

// ---------------------------------------------------------------- duality

Scenario duality(const Field& f) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {
      {"catalog:trunc_poly:3", 2}, {"catalog:matrix:2", 3}, {"catalog:quaternions", 3}, {"catalog:scalar", 0}};
  Scenario s{"duality", "derivations against bimodule maps out of O^1 A", {}, {}};
  for (const auto& [spec, expected] : cases) {
    s.inputs.push_back(spec);
    s.checks.push_back(make("duality/" + label(spec), "ce_duality_check", Expect::dimension, {"ce-duality"},
                            [spec, expected, f] {
                              const CEComplex ce(resolve_algebra(spec, f), 2);
                              const DualityReport r = ce_duality_check(ce, minimal_calculus(ce));
                              return Outcome::check(r.ok() && r.derivation_dim == expected,
                                                    {{"derivation_dim", r.derivation_dim},
                                                     {"hom_dim", r.hom_dim},
                                                     {"expected", expected},
                                                     {"derivation_roundtrip", r.derivation_roundtrip},
                                                     {"hom_roundtrip", r.hom_roundtrip}});
                            }));
  }
  return s;
}

// ---------------------------------------------------------------- universal

Scenario universal(const Field& f) {
  Scenario s{"universal", "the universal differential calculus", catalog_entries(), {}};
  for (const auto& spec : catalog_entries()) {
    const std::string l = label(spec);
    const Lazy<UniversalForms> uf([spec, f] { return universal_forms(resolve_algebra(spec, f)); });
    s.checks.push_back(make("kernel/" + l, "universal_forms", Expect::equality, {"universal-kernel"}, [uf] {
      const UniversalForms& u = uf.get();
      const std::size_t n = u.n();
      const bool ok = u.omega1 == u.kernel_m && u.omega1.dim() == n * n - n;
      return Outcome::check(ok, {{"omega1", u.omega1.dim()}, {"kernel_m", u.kernel_m.dim()}, {"n2_minus_n", n * n - n},
                                 {"omega2", u.omega2.dim()}});
    }));
    s.checks.push_back(make("dga/" + l, "juxtaposition_rule_holds", Expect::holds,
                            {"universal-dga", "juxtaposition-rule"}, [uf] {
                              const UniversalForms& u = uf.get();
                              const ValidationReport v = u.calculus.validate();
                              const bool jux = juxtaposition_rule_holds(u), rel = universal_relation_holds(u);
                              return Outcome::check(v.ok() && jux && rel && u.calculus.is_generated(),
                                                    {{"validation_failures", v.failures},
                                                     {"juxtaposition", jux},
                                                     {"relation", rel},
                                                     {"generated", u.calculus.is_generated()}});
                            }));
    s.checks.push_back(make("factorization/" + l, "universal_factorize", Expect::holds, {"universal-factorization"},
                            [uf] {
                              const UniversalForms& u = uf.get();
                              bool ok = true;
                              json rows = json::array();
                              const std::vector<std::pair<std::string, Bimodule>> targets = {
                                  {"A", regular_bimodule(u.algebra)}, {"Omega1", u.calculus.omega1}};
                              for (const auto& [name, q] : targets) {
                                const DerivationSpace der = derivations(q);
                                std::size_t good = 0;
                                for (const auto& delta : der.basis_maps()) {
                                  const Factorization fz = universal_factorize(u, q, delta);
                                  good += fz.unique && fz.f * u.calculus.d0 == delta;
                                }
                                ok = ok && good == der.dim();
                                rows.push_back({{"target", name}, {"derivations", der.dim()}, {"factored", good}});
                              }
                              return Outcome::check(ok, {{"targets", rows}});
                            }));
  }
  s.checks.push_back(make("extension", "extend_hom", Expect::holds, {"universal-extension"}, [f] {
    bool ok = true;
    json rows = json::array();
    for (const std::string spec : {"catalog:trunc_poly:3", "catalog:matrix:2"}) {
      const UniversalForms u = universal_forms(resolve_algebra(spec, f));
      const Matrix id = Matrix::identity(u.algebra.field(), u.n());
      const HomExtension self = extend_hom(u, id, u.calculus);
      const bool self_ok = self.ok() && self.rho1 == Matrix::identity(id.field(), u.omega1.dim()) &&
                           self.rho2 == Matrix::identity(id.field(), u.omega2.dim());
      const CEComplex ce(u.algebra, 2);
      const HomExtension to_ce = extend_hom(u, id, ce_calculus(ce, minimal_calculus(ce)));
      ok = ok && self_ok && to_ce.ok() && to_ce.surjective1;
      rows.push_back({{"algebra", label(spec)},
                      {"identity", self_ok},
                      {"onto_ce", to_ce.ok()},
                      {"onto_ce_surjective", to_ce.surjective1}});
    }
    const UniversalForms u = universal_forms(resolve_algebra("catalog:trunc_poly:2", f));
    const FiniteAlgebra k = resolve_algebra("catalog:scalar", f);
    Matrix rho(k.field(), 1, 2);
    rho.set(0, 0, 1);
    const HomExtension z = extend_hom(u, rho, zero_calculus(k));
    const bool zero_ok = z.ok() && z.rho1.is_zero();
    ok = ok && zero_ok;
    rows.push_back({{"algebra", "trunc_poly:2 -> scalar, x -> 0"}, {"kills_dx", zero_ok}});
    return Outcome::check(ok, {{"cases", rows}});
  }));
  return s;
}

// ---------------------------------------------------------------- jets

Vector tensor_vec(const TensorModule& t, const Vector& a, const Vector& p) {
  Vector out(a.field(), a.size() * p.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t q = 0; q < p.size(); ++q)
      if (a[x] != 0 && p[q] != 0) out.add_scaled_at(t.index(x, q), a[x] * p[q]);
  return out;
}

Scenario jets(const Field& f) {
  Scenario s{"jets", "jet modules and representability", commutative_entries(), {}};
  for (const auto& spec : commutative_entries()) {
    const std::string l = label(spec);
    s.checks.push_back(make("representability/" + l, "representability", Expect::equality, {"jet-representability"},
                            [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              bool ok = true;
                              json rows = json::array();
                              for (const std::string ps : {"regular", "free:2"}) {
                                const Bimodule p = resolve_module(ps, a);
                                for (std::size_t k = 0; k <= 2; ++k) {
                                  const JetModule jm = jet_module(p, k);
                                  const bool diffop = jk_is_diffop(jm);
                                  for (const std::string qs : {"regular", "free:2"}) {
                                    const Representability r = representability(jm, resolve_module(qs, a));
                                    ok = ok && r.ok() && diffop;
                                    rows.push_back({{"source", ps},
                                                    {"target", qs},
                                                    {"order", k},
                                                    {"jet_dim", jm.dim()},
                                                    {"hom_dim", r.hom_dim},
                                                    {"diff_dim", r.diff_dim},
                                                    {"roundtrips", r.diff_roundtrip && r.hom_roundtrip},
                                                    {"jk_is_diffop", diffop}});
                                  }
                                }
                              }
                              return Outcome::check(ok, {{"cases", rows}});
                            }));
    s.checks.push_back(make("zero-order/" + l, "jet_module", Expect::equality, {"jet-zero-order"}, [spec, f] {
      const FiniteAlgebra a = resolve_algebra(spec, f);
      const Bimodule p = regular_bimodule(a);
      const JetModule jm = jet_module(p, 0);
      const bool iso = jm.dim() == p.dim() && rank(jm.j) == p.dim();
      const Matrix id = Matrix::identity(a.field(), p.dim());
      const Factorization fz = factorize(jm, p, id);
      const bool ok = iso && fz.unique && fz.f * jm.j == id && jm.j * fz.f == Matrix::identity(a.field(), jm.dim());
      return Outcome::check(ok, {{"jet_dim", jm.dim()}, {"module_dim", p.dim()}, {"j_invertible", iso}});
    }));
    s.checks.push_back(make("first-order-relation/" + l, "jet_module", Expect::inclusion, {"jet-first-order-relation"},
                            [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const Bimodule p = regular_bimodule(a);
                              const JetModule jm = jet_module(p, 1);
                              const TensorModule& t = jm.ambient;
                              bool ok = true;
                              std::size_t count = 0;
                              for (std::size_t i = 0; i < a.dim(); ++i)
                                for (std::size_t j = 0; j < a.dim(); ++j)
                                  for (std::size_t q = 0; q < p.dim(); ++q) {
                                    const Vector x = a.basis(i), y = a.basis(j), pv = Vector::unit(a.field(), p.dim(), q);
                                    const Vector xy = a.multiply(x, y);
                                    const Vector v = tensor_vec(t, a.unit(), p.left_of(xy) * pv) -
                                                     tensor_vec(t, x, p.left(j) * pv) -
                                                     tensor_vec(t, y, p.left(i) * pv) + tensor_vec(t, xy, pv);
                                    ok = ok && jm.mu.contains(v);
                                    ++count;
                                  }
                              return Outcome::check(ok, {{"instances", count}, {"mu_dim", jm.mu.dim()}});
                            }));
  }
  s.checks.push_back(make("factorize-derivations", "factorize", Expect::holds, {"jet-factorization"}, [f] {
    const FiniteAlgebra a = resolve_algebra("catalog:trunc_poly:3", f);
    const Bimodule p = regular_bimodule(a);
    // x^2 -> 2x is not compatible with x^3 = 0, so d/dx itself is no operator of order <= 2
    Matrix ddx(a.field(), 3, 3);
    ddx.set(0, 1, 1);
    ddx.set(1, 2, 2);
    const JetModule j1 = jet_module(p, 1), j2 = jet_module(p, 2);
    bool ddx_rejected = false;
    try {
      factorize(j2, p, ddx);
    } catch (const NotMember&) {
      ddx_rejected = true;
    }
    Matrix euler(a.field(), 3, 3), shift(a.field(), 3, 3);
    euler.set(1, 1, 1);
    euler.set(2, 2, 2);
    shift.set(2, 1, 1);
    const std::vector<std::tuple<std::string, const JetModule*, Matrix>> cases = {
        {"x d/dx", &j1, euler}, {"x^2 d/dx", &j1, shift}, {"(x d/dx)^2", &j2, euler * euler}};
    bool ok = ddx_rejected;
    json rows = json::array();
    for (const auto& [name, jm, delta] : cases) {
      const Factorization fz = factorize(*jm, p, delta);
      const bool residual_zero = fz.f * jm->j == delta;
      ok = ok && residual_zero && fz.unique;
      rows.push_back({{"operator", name}, {"order", jm->order}, {"f", to_json(fz.f)}, {"residual_zero", residual_zero},
                      {"unique", fz.unique}});
    }
    return Outcome::check(ok, {{"ddx_rejected_up_to_order2", ddx_rejected}, {"cases", rows}});
  }));
  for (const std::string spec : {"catalog:matrix:2", "catalog:quaternions", "catalog:upper_triangular:2",
                                 "catalog:trunc_poly:3"}) {
    s.checks.push_back(make("two-sided/" + label(spec), "two_sided_jet", Expect::equality,
                            {"two-sided-jet-representability"}, [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const Bimodule p = regular_bimodule(a);
                              const JetModule jm = two_sided_jet(p);
                              const Representability r = representability(jm, p);
                              const bool diffop = jk_is_diffop(jm);
                              return Outcome::check(r.ok() && diffop, {{"jet_dim", jm.dim()},
                                                                       {"hom_dim", r.hom_dim},
                                                                       {"dv_dim", r.diff_dim},
                                                                       {"roundtrips", r.diff_roundtrip && r.hom_roundtrip},
                                                                       {"j_is_diffop", diffop}});
                            }));
  }
  s.checks.push_back(make("zero-module", "two_sided_jet", Expect::dimension, {"jet-zero-order"}, [f] {
    const FiniteAlgebra m2 = resolve_algebra("catalog:matrix:2", f);
    const FiniteAlgebra t3 = resolve_algebra("catalog:trunc_poly:3", f);
    const std::size_t two = two_sided_jet(zero_module(m2)).dim();
    const std::size_t one = jet_module(zero_module(t3), 1).dim();
    return Outcome::check(two == 0 && one == 0, {{"two_sided_dim", two}, {"order1_dim", one}});
  }));
  return s;
}

// ---------------------------------------------------------------- composition order

Scenario composition_order(const Field& f) {
  const std::vector<std::string> specs = {"catalog:matrix:2", "catalog:trunc_poly:4"};
  Scenario s{"composition-order", "Lunts orders add under composition", specs, {}};
  for (const auto& spec : specs) {
    s.checks.push_back(make("pairs/" + label(spec), "composition_order_check", Expect::inclusion, {"composition-order"},
                            [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const Bimodule reg = regular_bimodule(a);
                              const HomSpace h(reg, reg);
                              const Filtration l = lunts_filtration(h, 3, Side::left);
                              std::mt19937 rng(kSeed);
                              bool ok = true;
                              json rows = json::array();
                              for (std::size_t i = 0; i < 20; ++i) {
                                const std::size_t n = rng() % 4, m = rng() % (4 - n);
                                const Matrix d1 = h.unflatten(random_member(l[n], rng));
                                const Matrix d2 = h.unflatten(random_member(l[m], rng));
                                const bool in = composition_order_check(h, l, d1, n, d2, m);
                                ok = ok && in;
                                rows.push_back({{"n", n}, {"m", m}, {"in_I_n_plus_m", in}});
                              }
                              json dims = json::array();
                              for (const auto& t : l.terms) dims.push_back(t.dim());
                              return Outcome::check(ok, {{"seed", kSeed}, {"lunts_dims", dims}, {"pairs", rows}});
                            }));
  }
  return s;
}

// ---------------------------------------------------------------- graded

Scenario graded(const Field& f) {
  const std::vector<std::string> specs = {"catalog:grassmann:1", "catalog:grassmann:2"};
  Scenario s{"graded", "graded derivations, graded Diff_1 and the graded CE complex", specs, {}};
  for (const auto& spec : specs) {
    const std::string l = label(spec);
    s.checks.push_back(make("decomposition/" + l, "first_order_decomposition", Expect::equality,
                            {"graded-decomposition"}, [spec, f] {
                              const FiniteAlgebra a = resolve_algebra(spec, f);
                              const Bimodule reg = regular_bimodule(a);
                              const HomSpace h(reg, reg);
                              const Subspace gd = graded_diff(h, 1).space;
                              const DerivationSpace der = derivations(a, true);
                              const FirstOrderSplit sp = first_order_decomposition(h, gd, SplitFlavor::graded);
                              std::size_t odd = 0;
                              for (int p : der.parities) odd += p;
                              const bool ok = sp.ok() && gd.dim() == a.dim() + der.dim() &&
                                              sp.derivation_part == der.space;
                              return Outcome::check(ok, {{"graded_diff1", gd.dim()},
                                                         {"algebra", a.dim()},
                                                         {"derivations", der.dim()},
                                                         {"odd_derivations", odd},
                                                         {"direct", sp.direct},
                                                         {"spans", sp.spans}});
                            }));
    s.checks.push_back(make("coboundary/" + l, "graded_ce_coboundary", Expect::holds, {"graded-ce-dd-zero"},
                            [spec, f] {
                              const GradedCEComplex c(resolve_algebra(spec, f), kGradedCeDegree);
                              bool ok = true;
                              json dd = json::array(), pres = json::array(), dims = json::array();
                              for (std::size_t k = 0; k + 2 <= c.max_degree(); ++k) {
                                dd.push_back(c.dd_vanishes(k));
                                ok = ok && dd.back().get<bool>();
                              }
                              for (std::size_t k = 0; k < c.max_degree(); ++k) {
                                pres.push_back(c.d_preserves_forms(k));
                                ok = ok && pres.back().get<bool>();
                              }
                              for (std::size_t k = 0; k <= c.max_degree(); ++k) dims.push_back(c.linear_forms(k).dim());
                              return Outcome::check(ok, {{"derivations", c.derivation_dim()},
                                                         {"form_dims", dims},
                                                         {"dd_vanishes", dd},
                                                         {"d_preserves_forms", pres}});
                            }));
  }
  return s;
}

}  // namespace

std::vector<Scenario> builtin_suite(const Field& field) {
  return {commutative_collapse(field), dilemma_m2(field), dilemma_t2(field), ce_calculus_scenario(field),
          duality(field),              universal(field),  jets(field),       composition_order(field),
          graded(field)};
}

std::vector<std::string> scenario_ids() {
  std::vector<std::string> out;
  for (const auto& s : builtin_suite()) out.push_back(s.id);
  return out;
}

std::optional<Scenario> find_scenario(const std::string& id, const Field& field) {
  for (auto& s : builtin_suite(field))
    if (s.id == id) return std::move(s);
  return std::nullopt;
}

}  // namespace ncdiff::lab
