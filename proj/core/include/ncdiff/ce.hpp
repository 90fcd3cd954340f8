#pragma once

#include <cstddef>
#include <vector>

#include "ncdiff/derivations.hpp"

namespace ncdiff {

/// Cochains Hom_K(dA^{(x)k}, A) on the derivation Lie algebra dA with
/// values in A, and the center-multilinear alternating forms O^k inside.
///
/// A degree-k cochain is a vector of length m^k * n (m = dim dA): the value
/// on (u_{i1}, ..., u_{ik}) is the A-element in block (i1 ... ik read in
/// base m), coordinate block * n + t.
class CEComplex {
 public:
  explicit CEComplex(const FiniteAlgebra& a, std::size_t max_degree = 3);

  const FiniteAlgebra& algebra() const { return a_; }
  const DerivationSpace& derivations() const { return der_; }
  const std::vector<Matrix>& derivation_basis() const { return u_; }
  std::size_t derivation_dim() const { return u_.size(); }
  std::size_t max_degree() const { return max_degree_; }
  std::size_t cochain_dim(std::size_t k) const;

  /// O^k; O^0 = A. Throws InvalidArgument beyond max_degree.
  const Subspace& forms(std::size_t k) const;
  /// d on all degree-k cochains (k < max_degree).
  const SparseMatrix& coboundary(std::size_t k) const;
  Vector d(const Vector& phi, std::size_t k) const { return coboundary(k).apply(phi); }
  /// Coordinates of [u_i, u_j] in the derivation basis.
  const Vector& bracket(std::size_t i, std::size_t j) const { return bracket_[i * u_.size() + j]; }

  Vector evaluate(const Vector& phi, const std::vector<std::size_t>& tuple) const;
  /// Shuffle product; degrees r + s <= max_degree.
  Vector wedge(const Vector& phi, std::size_t r, const Vector& psi, std::size_t s) const;
  /// (a phi)(...) = a phi(...), (phi b)(...) = phi(...) b.
  Vector left_act(const Vector& a, const Vector& phi, std::size_t k) const;
  Vector right_act(const Vector& phi, const Vector& b, std::size_t k) const;
  /// The degree-1 cochain da: u -> u(a).
  Vector da(const Vector& a) const { return d(a, 0); }

  /// d^{k+1} o d^k vanishes on O^k (k + 2 <= max_degree).
  bool dd_vanishes(std::size_t k) const;
  /// d(O^k) lies in O^{k+1}.
  bool d_preserves_forms(std::size_t k) const;
  /// O^k as a bimodule (actions on values).
  EmbeddedModule form_module(std::size_t k) const;

 private:
  std::size_t block(const std::vector<std::size_t>& tuple) const;
  void build_forms(std::size_t k);
  void build_coboundary(std::size_t k);

  FiniteAlgebra a_;
  std::size_t max_degree_;
  DerivationSpace der_;
  std::vector<Matrix> u_;
  std::vector<Vector> bracket_;
  std::vector<Subspace> forms_;
  std::vector<SparseMatrix> d_;
};

/// The calculus generated by {da}: O^1 A is the bimodule closure of the da
/// inside O^1, and O^2 A the span of wedges of elements of O^1 A.
struct MinimalCalculus {
  EmbeddedModule o1;
  EmbeddedModule o2;
  /// d: A -> O^1 A in carrier coordinates (columns = d e_i).
  Matrix d0;
  /// d: O^1 A -> O^2 A in carrier coordinates. Throws NotMember at
  /// construction if d leaves O^2 A.
  Matrix d1;
};
MinimalCalculus minimal_calculus(const CEComplex& ce);

/// dA against Hom_{A-A}(O^1 A, A) through u -> (w -> w(u)) and
/// phi -> (a -> phi(da)).
struct DualityReport {
  std::size_t derivation_dim = 0;
  std::size_t hom_dim = 0;
  bool derivation_roundtrip = false;
  bool hom_roundtrip = false;
  bool ok() const { return derivation_dim == hom_dim && derivation_roundtrip && hom_roundtrip; }
};
DualityReport ce_duality_check(const CEComplex& ce, const MinimalCalculus& mc);

/// a da' = (da') a and da ^ da' = -da' ^ da for a, a' in a basis of the center.
bool ce_center_relations_hold(const CEComplex& ce);

/// d: O^k -> O^{k+1} is a first-order operator in Grothendieck's sense
/// (k + 1 <= max_degree). Meaningful for commutative algebras.
bool ce_d_is_first_order(const CEComplex& ce, std::size_t k);
/// d on the minimal calculus (A -> O^1 A for k = 0, O^1 A -> O^2 A for
/// k = 1) satisfies delta_a bar_delta_b d = 0.
bool ce_d_is_dv_first_order(const CEComplex& ce, const MinimalCalculus& mc, std::size_t k);

}  // namespace ncdiff
