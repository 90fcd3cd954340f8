#pragma once

#include <cstddef>
#include <vector>

#include "ncdiff/bimodule.hpp"

namespace ncdiff {

enum class Action { left, left_bullet, right, right_bullet };
enum class DeltaFlavor { plain, bar, graded };

/// Hom_K(P, Q) as the flat coordinate space of (dim Q) x (dim P) matrices;
/// the entry (r, c) of Phi sits at index r * dim P + c. All action and delta
/// operators are precomputed sparse matrices on that space:
///   left(a)         Phi -> L_Q(a) Phi          (a Phi)(p) = a Phi(p)
///   left_bullet(a)  Phi -> Phi L_P(a)          (Phi . a)(p) = Phi(ap)
///   right(a)        Phi -> R_Q(a) Phi          (Phi a)(p) = Phi(p) a
///   right_bullet(a) Phi -> Phi R_P(a)          (a . Phi)(p) = Phi(pa)
///   delta(a)     = left(a) - left_bullet(a)
///   bar_delta(a) = right(a) - right_bullet(a)
class HomSpace {
 public:
  HomSpace(Bimodule source, Bimodule target);

  const Bimodule& source() const { return p_; }
  const Bimodule& target() const { return q_; }
  const FiniteAlgebra& algebra() const { return p_.algebra(); }
  const Field& field() const { return p_.field(); }
  std::size_t dim() const { return q_.dim() * p_.dim(); }
  std::size_t index(std::size_t r, std::size_t c) const { return r * p_.dim() + c; }

  Vector flatten(const Matrix& phi) const;
  Matrix unflatten(const Vector& v) const;

  const SparseMatrix& op(Action kind, std::size_t i) const;
  SparseMatrix op(Action kind, const Vector& a) const;
  const std::vector<SparseMatrix>& lefts() const { return left_; }
  const std::vector<SparseMatrix>& left_bullets() const { return left_bullet_; }
  const std::vector<SparseMatrix>& rights() const { return right_; }
  const std::vector<SparseMatrix>& right_bullets() const { return right_bullet_; }
  const std::vector<SparseMatrix>& deltas() const { return delta_; }
  const std::vector<SparseMatrix>& bar_deltas() const { return bar_delta_; }
  /// Graded delta on every parity component at once. Throws InvalidArgument
  /// unless both modules and the algebra are graded and char != 2.
  const std::vector<SparseMatrix>& graded_deltas() const;
  const std::vector<SparseMatrix>& deltas(DeltaFlavor f) const;

  /// Parity of the elementary map sending p_c to q_r.
  int entry_parity(std::size_t flat) const;
  /// Parity of a homogeneous map; nullopt for mixed or zero maps.
  std::optional<int> parity(const Matrix& phi) const;

  Matrix act(Action kind, const Vector& a, const Matrix& phi) const;
  Matrix delta(const Vector& a, const Matrix& phi) const;
  Matrix bar_delta(const Vector& a, const Matrix& phi) const;
  /// a Phi - (-1)^{[a][Phi]} Phi . a for homogeneous a and Phi. Throws
  /// InvalidArgument on mixed-parity input.
  Matrix graded_delta(const Vector& a, const Matrix& phi) const;

  /// True iff every (k+1)-fold composite of basis deltas kills Phi.
  bool iterated_delta_vanishes(const Matrix& phi, std::size_t k, DeltaFlavor flavor = DeltaFlavor::plain) const;

 private:
  void require_graded() const;

  Bimodule p_, q_;
  std::vector<SparseMatrix> left_, left_bullet_, right_, right_bullet_, delta_, bar_delta_;
  mutable std::vector<SparseMatrix> graded_delta_;
};

}  // namespace ncdiff
