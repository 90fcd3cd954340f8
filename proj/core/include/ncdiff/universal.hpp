#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncdiff/bimodule.hpp"
#include "ncdiff/ce.hpp"

namespace ncdiff {

/// A first-order differential calculus truncated at degree 2: bimodules
/// Omega^1, Omega^2, d0: A -> Omega^1, d1: Omega^1 -> Omega^2 and the
/// product Omega^1 x Omega^1 -> Omega^2.
struct Calculus {
  std::string name;
  FiniteAlgebra algebra;
  Bimodule omega1;
  Bimodule omega2;
  Matrix d0;                     ///< dim Omega^1 x dim A
  Matrix d1;                     ///< dim Omega^2 x dim Omega^1
  std::vector<Matrix> product;   ///< product[i] * w = w_i w

  Vector d(const Vector& a) const { return d0 * a; }
  Vector multiply(const Vector& w, const Vector& w2) const;
  /// DGA axioms through degree 2: Leibniz for d0 and d1, d1 d0 = 0,
  /// bimodule compatibility and balance of the product.
  ValidationReport validate() const;
  /// Omega^1 is spanned by the a db.
  bool is_generated() const;
};

Calculus zero_calculus(const FiniteAlgebra& a);
Calculus ce_calculus(const CEComplex& ce, const MinimalCalculus& mc);

/// Omega^1 inside A (x) A (coordinate p*n + q) and Omega^2 = Omega^1 (x)_A
/// Omega^1 realized inside A (x) A (x) A (coordinate (p*n + q)*n + r) through
/// (x (x) y) (x)_A (z (x) w) -> x (x) yz (x) w.
struct UniversalForms {
  FiniteAlgebra algebra;
  Subspace omega1;
  Subspace omega2;
  Subspace kernel_m;     ///< ker of multiplication A (x) A -> A
  Calculus calculus;     ///< in carrier coordinates

  std::size_t n() const { return algebra.dim(); }
  /// da = 1 (x) a - a (x) 1, ambient coordinates.
  Vector d_ambient(const Vector& a) const;
  /// (a (x) b) in ambient coordinates.
  Vector tensor(const Vector& a, const Vector& b) const;
  Vector left_ambient(const Vector& a, const Vector& w) const;
  Vector right_ambient(const Vector& w, const Vector& b) const;
  /// Product of two degree-1 ambient tensors into A (x) A (x) A.
  Vector product_ambient(const Vector& w, const Vector& w2) const;
  /// d of a degree-1 ambient tensor.
  Vector d1_ambient(const Vector& w) const;
};

UniversalForms universal_forms(const FiniteAlgebra& a);
inline Calculus universal_calculus(const FiniteAlgebra& a) { return universal_forms(a).calculus; }

/// (da)b = d(ab) - a db on all basis pairs.
bool universal_relation_holds(const UniversalForms& u);
/// (a0 da1)(b0 db1) = a0 d(a1 b0) db1 - a0 a1 db0 db1 on all basis quadruples.
bool juxtaposition_rule_holds(const UniversalForms& u);

/// Bimodule map f: Omega^1 -> P with f d = delta.
struct Factorization {
  Matrix f;        ///< dim P x dim Omega^1
  bool unique = false;
};
/// Throws NotMember if delta is not a derivation into p.
Factorization universal_factorize(const UniversalForms& u, const Bimodule& p, const Matrix& delta);

/// rho*: Omega^{<=2}(A) -> target built from rho(a0 da1 ...) = rho(a0) d' rho(a1) ...
struct HomExtension {
  Matrix rho1;  ///< target omega1 x universal omega1
  Matrix rho2;  ///< target omega2 x universal omega2
  bool intertwines0 = false;   ///< rho1 d = d' rho
  bool intertwines1 = false;   ///< rho2 d = d' rho1
  bool multiplicative = false;
  bool bimodule_compatible = false;
  bool surjective1 = false;
  bool ok() const { return intertwines0 && intertwines1 && multiplicative && bimodule_compatible; }
};
/// rho is a dim A' x dim A matrix; throws InvalidArgument unless it is a
/// unital algebra homomorphism into target.algebra.
HomExtension extend_hom(const UniversalForms& u, const Matrix& rho, const Calculus& target);

/// Central a, a' with a da' != (da') a in Omega^1(A).
struct CentralRelationWitness {
  Vector a;
  Vector a2;
  Vector difference;  ///< a da' - (da') a in A (x) A
};
std::optional<CentralRelationWitness> central_relation_failure(const UniversalForms& u);

}  // namespace ncdiff
