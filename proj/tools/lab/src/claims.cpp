#include "ncdiff/lab/claims.hpp"

namespace ncdiff::lab {

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {"delta-commute", "delta_a and bar delta_b commute as operators on Hom(P, Q)", "result"},
      {"dv-reduces-commutative",
       "over a commutative algebra with central modules the dv first-order operators are exactly Grothendieck's "
       "first-order operators",
       "result"},
      {"lunts-reduces-commutative",
       "over a commutative algebra the left and right Lunts filtrations coincide with Grothendieck's Diff_k", "result"},
      {"derivation-compositions-lunts", "a composite of k derivations of A lies in the Lunts term I_k", "result"},
      {"derivation-compositions-two-sided", "a composite of k derivations of A lies in the two-sided term TS_k",
       "result"},
      {"definitions-coincide-commutative",
       "all notions of first-order operator agree for a commutative algebra and central modules", "result"},
      {"ce-da-evaluates", "in the Chevalley-Eilenberg calculus (da)(u) = u(a) for every derivation u", "result"},
      {"ce-d-unit", "the Chevalley-Eilenberg differential kills the unit", "result"},
      {"ce-center-anticommute", "da ^ da' = -da' ^ da for central a, a'", "result"},
      {"ce-center-commute", "a da' = (da') a for central a, a'", "result"},
      {"cartan-two-sided", "u^ is a dv first-order operator when u lies in the two-sided dual", "result"},
      {"jet-first-order-relation", "1 (x) abp - a (x) bp - b (x) ap + ab (x) p lies in mu^2", "result"},

      {"commutative-decomposition", "Diff_1(A, A) = A + dA as a direct sum over a commutative algebra", "acceptance"},
      {"ce-dd-zero", "the Chevalley-Eilenberg coboundary squares to zero and preserves the forms", "acceptance"},
      {"ce-wedge-leibniz", "d(phi ^ psi) = d phi ^ psi + (-1)^r phi ^ d psi for phi of degree r", "acceptance"},
      {"ce-graded-commutative", "phi ^ psi = (-1)^{rs} psi ^ phi over a commutative algebra", "acceptance"},
      {"ce-d-first-order", "the Chevalley-Eilenberg differential is a first-order operator", "acceptance"},
      {"ce-duality", "derivations of A are the bimodule maps O^1 A -> A, with mutually inverse correspondences",
       "acceptance"},
      {"universal-universal-central-relation-fails", "a da = (da) a fails in the universal calculus of K[x]/(x^2), witness 2 x (x) x",
       "acceptance"},
      {"universal-kernel", "the universal one-forms are the kernel of multiplication, of dimension n^2 - n",
       "acceptance"},
      {"universal-dga", "the universal calculus satisfies the differential graded algebra axioms through degree 2",
       "acceptance"},
      {"juxtaposition-rule", "(a0 da1)(b0 db1) = a0 d(a1 b0) db1 - a0 a1 db0 db1", "acceptance"},
      {"universal-factorization", "every derivation factors uniquely through the universal d", "acceptance"},
      {"universal-extension", "an algebra map extends to a morphism of calculi intertwining the differentials",
       "acceptance"},
      {"jet-representability", "Hom_A(J^k(P), Q) = Diff_k(P, Q) with inverse correspondences, k <= 2", "acceptance"},
      {"jet-zero-order", "J^0(P) is naturally P", "acceptance"},
      {"jet-factorization", "a k-order operator factors uniquely through J^k", "acceptance"},
      {"two-sided-jet-representability",
       "two-sided first jets represent the operators with bar delta_c delta_b = 0", "acceptance"},
      {"derivation-not-naive",
       "some derivation of M_2 fails Grothendieck's first-order condition while lying in Lunts I_1", "acceptance"},
      {"cartan-fails-dv", "some Cartan-pair vector field on M_2 is not a dv first-order operator", "acceptance"},
      {"dv-outside-lunts",
       "a dv first-order operator outside left Lunts I_1, or an exhaustive negative over the listed modules",
       "acceptance"},
      {"left-jet-fails", "the left-jet identity fails at order 1 over M_2", "acceptance"},
      {"composition-order", "Delta_1 in I_n and Delta_2 in I_m give Delta_1 Delta_2 in I_{n+m}", "acceptance"},
      {"graded-decomposition", "graded Diff_1 = A + dA as a direct sum for a Grassmann algebra", "acceptance"},
      {"graded-ce-dd-zero", "the graded Chevalley-Eilenberg coboundary squares to zero", "acceptance"},
  };
  return all;
}

const Claim* find_claim(const std::string& id) {
  for (const auto& c : claims())
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace ncdiff::lab
