#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncdiff/algebra.hpp"

namespace ncdiff {

/// Finite-dimensional two-sided module over a FiniteAlgebra, stored as the
/// matrices L(e_i), R(e_i) of left and right multiplication by basis
/// elements. Column convention: L(e_i) * p is e_i p.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(FiniteAlgebra algebra, std::string name, std::size_t dim, std::vector<Matrix> left,
           std::vector<Matrix> right, std::optional<std::vector<int>> parity = std::nullopt);

  const FiniteAlgebra& algebra() const { return algebra_; }
  const Field& field() const { return algebra_.field(); }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Matrix& left(std::size_t i) const { return left_[i]; }
  const Matrix& right(std::size_t i) const { return right_[i]; }
  const std::vector<Matrix>& left_actions() const { return left_; }
  const std::vector<Matrix>& right_actions() const { return right_; }
  Matrix left_of(const Vector& a) const;
  Matrix right_of(const Vector& a) const;
  /// a p b
  Vector act(const Vector& a, const Vector& p, const Vector& b) const;

  bool is_graded() const { return parity_.has_value(); }
  const std::optional<std::vector<int>>& parity() const { return parity_; }
  int parity_of(std::size_t i) const { return parity_ ? (*parity_)[i] : 0; }

  /// Checks the bimodule axioms; with central = true also L(z) = R(z) on
  /// a basis of the center.
  ValidationReport validate(bool central = false) const;
  bool is_central() const;

  Bimodule with_name(std::string name) const;

 private:
  FiniteAlgebra algebra_;
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<Matrix> left_, right_;
  std::optional<std::vector<int>> parity_;
};

Bimodule regular_bimodule(const FiniteAlgebra& a);
/// A^k with the diagonal actions; block j occupies coordinates [j*n, (j+1)*n).
Bimodule free_module(const FiniteAlgebra& a, std::size_t rank);
Bimodule direct_sum(const Bimodule& p, const Bimodule& q);
Bimodule zero_module(const FiniteAlgebra& a);
/// One-dimensional bimodule a.k.b = chi_l(a) k chi_r(b) for unital
/// characters chi_l, chi_r: A -> K given by their values on the basis.
/// Throws InvalidArgument unless both are algebra maps.
Bimodule character_bimodule(const FiniteAlgebra& a, const Vector& chi_left, const Vector& chi_right);
/// The same space with left and right actions exchanged, as a bimodule
/// over the opposite algebra.
Bimodule opposite(const Bimodule& p);

/// A tensor product of A with P (and possibly A again) carrying an outer
/// bimodule structure plus the inner actions on the P factor.
///
/// For A (x) P the coordinate of a (x) p is a*m + p, the outer structure is
/// b(a (x) p) = ba (x) p and (a (x) p)b = a (x) pb, and inner_left is
/// b.(a (x) p) = a (x) bp. inner_right is empty.
///
/// For A (x) P (x) A the coordinate of a (x) p (x) c is (a*m + p)*n + c, the
/// outer structure acts on the two A factors and the inner actions on P.
struct TensorModule {
  Bimodule outer;
  std::vector<Matrix> inner_left;
  std::vector<Matrix> inner_right;
  std::size_t module_dim = 0;
  bool two_sided = false;

  std::size_t index(std::size_t a, std::size_t p) const { return a * module_dim + p; }
  std::size_t index(std::size_t a, std::size_t p, std::size_t c) const {
    return (a * module_dim + p) * outer.algebra().dim() + c;
  }
  /// delta^b = outer left(b) - inner left(b)
  Matrix delta(std::size_t b) const;
  /// bar delta^b = outer right(b) - inner right(b); two-sided only.
  Matrix bar_delta(std::size_t b) const;
};

TensorModule tensor_A_P(const Bimodule& p);
TensorModule tensor_A_P_A(const Bimodule& p);

/// A module realized inside a larger coordinate space: `carrier` is the
/// span of the module in the ambient coordinates, and module.left/right are
/// the ambient actions restricted to it in canonical coordinates.
struct EmbeddedModule {
  Bimodule module;
  Subspace carrier;
  /// Carrier coordinates -> ambient vector.
  Vector embed(const Vector& coords) const { return carrier.from_coordinates(coords); }
  /// Ambient vector -> carrier coordinates. Throws NotMember.
  Vector coordinates(const Vector& v) const { return carrier.coordinates(v); }
};

/// Restricts ambient actions to a subspace stable under all of them.
/// Throws NotMember if the subspace is not stable.
EmbeddedModule restrict_module(const FiniteAlgebra& a, std::string name, const Subspace& s,
                               const std::vector<SparseMatrix>& left, const std::vector<SparseMatrix>& right,
                               std::optional<std::vector<int>> ambient_parity = std::nullopt);

/// Right-linear maps u: Q -> A (u(qa) = u(q)a), as a subspace of the flat
/// space Hom_K(Q, A) (coordinate r*dimQ + c for the matrix entry (r, c)),
/// with (bu)(q) = b u(q) and (ub)(q) = u(bq).
EmbeddedModule right_dual(const Bimodule& q);
/// Left-linear maps u(aq) = a u(q), with (ub)(q) = u(q) b and (bu)(q) = u(qb).
EmbeddedModule left_dual(const Bimodule& q);

}  // namespace ncdiff
