#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ncdiff/linalg.hpp"

namespace ncdiff {

/// Outcome of FiniteAlgebra::validate and Bimodule::validate. Each failure
/// names the identity that broke and the basis indices witnessing it.
struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Unital associative algebra of dimension n given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k, optionally Z/2-graded by basis parity.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// sc is indexed (i * n + j) * n + k. Products are cached eagerly; call
  /// validate() before trusting the result.
  FiniteAlgebra(Field field, std::string name, std::vector<std::string> basis_names,
                std::vector<mpq_class> sc, Vector unit,
                std::optional<std::vector<int>> parity = std::nullopt);

  const Field& field() const { return field_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  const mpq_class& sc(std::size_t i, std::size_t j, std::size_t k) const { return sc_[(i * n_ + j) * n_ + k]; }
  const std::vector<mpq_class>& structure_constants() const { return sc_; }
  const Vector& unit() const { return unit_; }

  bool is_graded() const { return parity_.has_value(); }
  const std::optional<std::vector<int>>& parity() const { return parity_; }
  /// Parity of e_i; 0 when ungraded.
  int parity_of(std::size_t i) const { return parity_ ? (*parity_)[i] : 0; }
  /// Parity of a homogeneous element, nullopt for mixed or zero elements.
  std::optional<int> element_parity(const Vector& a) const;

  Vector basis(std::size_t i) const { return Vector::unit(field_, n_, i); }
  Vector element(std::initializer_list<long> coords) const;
  /// Throws DimensionMismatch on wrong coordinate length.
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of x -> e_i x (column j = e_i e_j).
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  /// Matrix of x -> x e_i.
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult(const Vector& a) const;
  Matrix right_mult(const Vector& a) const;

  ValidationReport validate() const;
  Subspace center() const;
  bool is_commutative() const;
  /// Throws InvalidArgument when the algebra carries no parity.
  bool is_graded_commutative() const;

  /// Same space with reversed multiplication.
  FiniteAlgebra opposite() const;
  FiniteAlgebra with_name(std::string name) const;

  friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return a.field_ == b.field_ && a.name_ == b.name_ && a.basis_names_ == b.basis_names_ && a.sc_ == b.sc_ &&
           a.unit_ == b.unit_ && a.parity_ == b.parity_;
  }

 private:
  Field field_;
  std::string name_;
  std::size_t n_ = 0;
  std::vector<std::string> basis_names_;
  std::vector<mpq_class> sc_;
  Vector unit_;
  std::optional<std::vector<int>> parity_;
  std::vector<Matrix> left_, right_;
};

/// Named algebras with fixed basis orderings:
///   scalar           1-dim ground field, basis {1}
///   trunc_poly n     K[x]/(x^n), basis 1, x, ..., x^(n-1)
///   trunc_xy         K[x,y]/(x^2, xy, y^2), basis 1, x, y
///   matrix k         M_k(K), matrix units e_rc at index r*k + c
///   upper_triangular k   upper triangular k x k matrices, e_rc (r <= c) row-major
///   quaternions      basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1
///   grassmann g      Lambda(t1..tg), monomial with bitmask b at index b, parity |b| mod 2
///   group_algebra m  K[Z/m], basis g^0 .. g^(m-1)
namespace catalog {

FiniteAlgebra scalar(Field field = Field::rationals());
FiniteAlgebra trunc_poly(std::size_t n, Field field = Field::rationals());
FiniteAlgebra trunc_xy(Field field = Field::rationals());
FiniteAlgebra matrix(std::size_t k, Field field = Field::rationals());
FiniteAlgebra upper_triangular(std::size_t k, Field field = Field::rationals());
FiniteAlgebra quaternions(Field field = Field::rationals());
FiniteAlgebra grassmann(std::size_t g, Field field = Field::rationals());
FiniteAlgebra group_algebra(std::size_t m, Field field = Field::rationals());
/// Direct product A x B; basis of A followed by basis of B.
FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Lookup by name with one integer parameter (ignored where unused).
/// Throws InvalidArgument for unknown names or bad parameters.
FiniteAlgebra by_name(const std::string& name, long param, Field field = Field::rationals());
std::vector<std::string> names();

}  // namespace catalog

}  // namespace ncdiff
