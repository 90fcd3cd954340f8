// One line per release criterion; nonzero exit if any fails.
#include <cstdio>
#include <functional>
#include <string>

#include "ncdiff/cartan.hpp"
#include "ncdiff/ce.hpp"
#include "ncdiff/derivations.hpp"
#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/graded_ce.hpp"
#include "ncdiff/jets.hpp"
#include "ncdiff/lab/json.hpp"
#include "ncdiff/lab/scenario.hpp"
#include "ncdiff/lab/suite.hpp"
#include "ncdiff/universal.hpp"

#include "../oracle/brute.hpp"

using namespace ncdiff;
using namespace ncdiff::lab;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::vector<Report> g_reports;

const Report& report(const std::string& id) {
  for (const auto& r : g_reports)
    if (r.scenario == id) return r;
  throw NotMember("no report " + id);
}

const CheckResult* result(const Report& r, const std::string& id) {
  for (const auto& c : r.results)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<FiniteAlgebra> commutative_catalog() {
  return {catalog::trunc_poly(3), catalog::trunc_xy(), catalog::group_algebra(3)};
}

Verdict c1() {
  Verdict v;
  for (const auto& a : commutative_catalog()) {
    const Bimodule reg = regular_bimodule(a);
    const HomSpace h(reg, reg);
    const Subspace d1 = grothendieck_diff(h, 1).space, d0 = grothendieck_diff(h, 0).space;
    const Subspace der = brute::brute_derivations(a, false, 0);
    v.require(d0.dim() == a.dim(), a.name() + " Diff_0 != A");
    v.require(d1.dim() == a.dim() + der.dim(), a.name() + " dim Diff_1 != dim A + dim dA");
    v.require(intersect(d0, der).dim() == 0, a.name() + " sum not direct");
    v.require(sum(d0, der) == d1, a.name() + " A + dA != Diff_1");
    const FirstOrderSplit sp = first_order_decomposition(h, d1, SplitFlavor::commutative);
    v.require(sp.ok(), a.name() + " library split");
  }
  return v;
}

Verdict c2() {
  Verdict v;
  for (const auto& a : commutative_catalog()) {
    const Bimodule reg = regular_bimodule(a);
    const HomSpace h(reg, reg);
    const Filtration g = grothendieck_chain(h, 2);
    const Filtration l = lunts_filtration(h, 2, Side::left), r = lunts_filtration(h, 2, Side::right);
    const Filtration ts = two_sided_filtration(h, 2).filtration;
    for (std::size_t k = 0; k <= 2; ++k) {
      const std::string at = a.name() + " k=" + std::to_string(k);
      v.require(l[k].basis() == g[k].basis(), at + " left Lunts");
      v.require(r[k].basis() == g[k].basis(), at + " right Lunts");
      v.require(ts[k].basis() == g[k].basis(), at + " two-sided");
    }
  }
  return v;
}

Verdict c3() {
  Verdict v;
  const Report& r = report("ce-calculus");
  std::size_t coboundaries = 0;
  for (const auto& c : r.results) {
    v.require(c.outcome.met, c.id);
    if (c.id.rfind("coboundary/", 0) == 0) {
      ++coboundaries;
      const auto& dd = c.outcome.data.at("dd_vanishes");
      v.require(dd.size() == 3, c.id + " dd checked below degree 3");
    }
  }
  v.require(coboundaries == 8, "catalog coverage");
  const CheckResult* w = result(r, "wedge-leibniz");
  v.require(w && w->outcome.data.at("pairs") == 100, "100 wedge pairs");
  // direct tensor expansion on K[x]/(x^2)
  const FiniteAlgebra a = catalog::trunc_poly(2);
  const Vector dx = brute::universal_d(a, a.basis(1));
  const Vector expanded = brute::mult_left2(a, 1, dx) - brute::mult_right2(a, dx, 1);
  v.require(expanded == Vector::from_ints(a.field(), {0, 0, 0, 2}), "x dx - dx x != 2 x(x)x");
  const auto wit = central_relation_failure(universal_forms(a));
  v.require(wit && wit->difference == expanded, "universal witness differs from expansion");
  const CEComplex ce(a, 2);
  v.require(ce_center_relations_hold(ce), "CE center relations");
  return v;
}

Verdict c4() {
  Verdict v;
  const std::vector<std::pair<FiniteAlgebra, std::size_t>> cases = {
      {catalog::trunc_poly(3), 2}, {catalog::matrix(2), 3}, {catalog::quaternions(), 3}};
  for (const auto& [a, expected] : cases) {
    const CEComplex ce(a, 2);
    const MinimalCalculus mc = minimal_calculus(ce);
    const DualityReport d = ce_duality_check(ce, mc);
    const std::size_t der = brute::brute_derivations(a, false, 0).dim();
    const std::size_t hom = brute::brute_bimodule_maps(mc.o1.module, regular_bimodule(a)).dim();
    v.require(d.ok(), a.name() + " roundtrip");
    v.require(der == expected && hom == expected, a.name() + " oracle dims " + std::to_string(der) + "/" +
                                                      std::to_string(hom));
    v.require(d.derivation_dim == der && d.hom_dim == hom, a.name() + " library dims");
  }
  return v;
}

Verdict c5() {
  Verdict v;
  std::vector<FiniteAlgebra> all = brute::ungraded();
  all.push_back(catalog::trunc_poly(2));
  all.push_back(catalog::grassmann(2));
  for (const auto& a : all) {
    const UniversalForms u = universal_forms(a);
    v.require(u.omega1 == kernel(brute::multiplication(a)), a.name() + " omega1 != ker m");
    v.require(u.calculus.is_generated(), a.name() + " not generated");
    const Bimodule o1 = u.calculus.omega1;
    for (const Bimodule& target : {regular_bimodule(a), o1}) {
      const DerivationSpace der = derivations(target);
      for (const auto& delta : der.basis_maps()) {
        const Factorization f = universal_factorize(u, target, delta);
        v.require(f.unique && f.f * u.calculus.d0 == delta, a.name() + " factorization into " + target.name());
      }
    }
  }
  v.require(universal_forms(catalog::matrix(2)).omega1.dim() == 12, "M2 dim 12");
  v.require(universal_forms(catalog::trunc_poly(2)).omega1.dim() == 2, "K[x]/(x^2) dim 2");
  return v;
}

Verdict c6() {
  Verdict v;
  for (const auto& a : commutative_catalog()) {
    const std::vector<Bimodule> mods = {regular_bimodule(a), free_module(a, 2)};
    for (const auto& p : mods)
      for (std::size_t k = 0; k <= 2; ++k) {
        const JetModule jm = jet_module(p, k);
        for (const auto& q : mods) {
          const std::string at = a.name() + " " + std::to_string(p.dim()) + "->" + std::to_string(q.dim()) +
                                 " k=" + std::to_string(k);
          const HomSpace h(p, q);
          const Subspace diff = grothendieck_diff(h, k).space;
          const Representability r = representability(jm, q);
          v.require(r.ok() && r.diff_dim == diff.dim(), at + " representability");
          for (const auto& b : diff.basis_vectors()) {
            const Matrix delta = h.unflatten(b);
            const Factorization f = factorize(jm, q, delta);
            v.require(f.unique && f.f * jm.j == delta, at + " factorization");
          }
        }
      }
  }
  const Bimodule m = regular_bimodule(catalog::matrix(2));
  const Representability r = representability(two_sided_jet(m), m);
  const std::size_t dv = dv_first_order(HomSpace(m, m)).space.dim();
  v.require(r.ok() && r.hom_dim == dv, "two-sided M2 " + std::to_string(r.hom_dim) + " vs " + std::to_string(dv));
  return v;
}

Verdict c7() {
  Verdict v;
  const Report& r = report("dilemma-M2");
  v.require(r.ok(), "dilemma-M2 not ok");
  auto status = [&](const std::string& id) {
    const CheckResult* c = result(r, id);
    return c && c->outcome.met ? c->outcome.status : std::string("missing");
  };
  v.require(status("derivation-not-naive") == "witness", "(a)");
  v.require(status("cartan-fails-dv") == "witness", "(b)");
  const std::string sc = status("dv-outside-lunts");
  v.require(sc == "witness" || sc == "negative", "(c)");
  if (sc == "negative") {
    const auto& searched = result(r, "dv-outside-lunts")->outcome.data.at("searched");
    v.require(!searched.empty() && searched[0].contains("hom_dim") && searched[0].contains("lunts_left1_dim"),
              "(c) search not logged");
    const CheckResult* t2 = result(report("dilemma-T2"), "dv-outside-lunts/S12->regular");
    v.require(t2 && t2->outcome.status == "witness", "(c) T2 witness");
  }
  v.require(status("left-jet-fails") == "witness", "(d)");
  if (v.pass) v.detail = "(c) " + sc;
  return v;
}

Verdict c8() {
  Verdict v;
  const Report& r = report("composition-order");
  for (const std::string id : {"pairs/matrix:2", "pairs/trunc_poly:4"}) {
    const CheckResult* c = result(r, id);
    v.require(c && c->outcome.met, id);
    if (!c) continue;
    const auto& pairs = c->outcome.data.at("pairs");
    v.require(pairs.size() == 20, id + " pair count");
    for (const auto& p : pairs)
      v.require(p.at("n").get<std::size_t>() + p.at("m").get<std::size_t>() <= 3 && p.at("in_I_n_plus_m").get<bool>(),
                id + " pair");
  }
  return v;
}

Verdict c9() {
  Verdict v;
  for (std::size_t g = 1; g <= 2; ++g) {
    const FiniteAlgebra a = catalog::grassmann(g);
    const std::string at = a.name();
    const DerivationSpace der = derivations(a, true);
    const Subspace even = brute::brute_derivations(a, true, 0), odd = brute::brute_derivations(a, true, 1);
    v.require(der.dim() == even.dim() + odd.dim() && der.space == sum(even, odd), at + " graded Leibniz oracle");
    const Bimodule reg = regular_bimodule(a);
    const HomSpace h(reg, reg);
    const Subspace d0 = graded_diff(h, 0).space, d1 = graded_diff(h, 1).space;
    v.require(d0.dim() == a.dim(), at + " graded Diff_0");
    v.require(intersect(d0, der.space).dim() == 0 && sum(d0, der.space) == d1, at + " graded Diff_1 = A + dA");
    const GradedCEComplex ce(a, 4);
    for (std::size_t k = 0; k <= 2; ++k) v.require(ce.dd_vanishes(k), at + " dd at " + std::to_string(k));
  }
  return v;
}

Verdict c10() {
  Verdict v;
  const Environment env;
  std::vector<Report> again;
  for (const auto& s : builtin_suite()) again.push_back(run_scenario(s, env));
  const std::string a = canonical(suite_json(g_reports, env)), b = canonical(suite_json(again, env));
  v.require(a == b, "reports differ");
  v.detail = std::to_string(a.size()) + " bytes";
  return v;
}

}  // namespace

int main() {
  const Environment env;
  for (const auto& s : builtin_suite()) g_reports.push_back(run_scenario(s, env));
  const std::vector<std::function<Verdict()>> criteria = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("error: ") + e.what();
    }
    failed += !v.pass;
    std::printf("criterion %zu: %s%s%s\n", i + 1, v.pass ? "PASS" : "FAIL", v.detail.empty() ? "" : " ",
                v.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
