#pragma once

#include <optional>
#include <vector>

#include "ncdiff/homspace.hpp"

namespace ncdiff {

/// Derivations A -> Q as a subspace of Hom_K(A, Q) (flat coordinates of
/// HomSpace(regular A, Q)). In the graded case the space is the direct sum
/// of its even and odd parts and every basis vector is homogeneous.
struct DerivationSpace {
  Subspace space;
  bool graded = false;
  std::size_t target_dim = 0;
  std::size_t algebra_dim = 0;
  /// Parity of each canonical basis vector (all 0 when ungraded).
  std::vector<int> parities;

  std::size_t dim() const { return space.dim(); }
  Matrix basis_map(std::size_t i) const { return Matrix::unflatten(space.basis_vector(i), target_dim, algebra_dim); }
  std::vector<Matrix> basis_maps() const;
  bool contains(const Matrix& u) const { return space.contains(u.flatten()); }
  /// Coordinates of a member in the canonical basis.
  Vector coordinates(const Matrix& u) const { return space.coordinates(u.flatten()); }
};

/// Solves u(e_i e_j) = u(e_i) e_j + e_i u(e_j) over all basis pairs, or the
/// graded rule u(ab) = u(a) b + (-1)^{[a][u]} a u(b) separately for each
/// parity of u. Graded mode throws InvalidArgument without parities or in
/// characteristic 2.
DerivationSpace derivations(const Bimodule& q, bool graded = false);
DerivationSpace derivations(const FiniteAlgebra& a, bool graded = false);

/// u o v - v o u; throws NotMember unless both are derivations of A.
Matrix lie_bracket(const FiniteAlgebra& a, const Matrix& u, const Matrix& v);
/// u o v - (-1)^{[u][v]} v o u for homogeneous graded derivations.
Matrix super_bracket(const FiniteAlgebra& a, const Matrix& u, const Matrix& v);
/// Parity of a homogeneous endomorphism of A; nullopt if mixed or zero.
std::optional<int> map_parity(const FiniteAlgebra& a, const Matrix& u);

enum class SplitFlavor {
  /// zero order = A-linear maps (commutative A, central Q)
  commutative,
  /// zero order = graded A-linear maps of either parity
  graded,
  /// zero order = left A-linear maps
  dv_left,
  /// zero order = right A-linear maps
  dv_right,
};

/// Diff_1(A, Q) against zero-order maps plus derivations.
struct FirstOrderSplit {
  Subspace zero_order;
  Subspace derivation_part;
  bool direct = false;
  bool spans = false;
  bool ok() const { return direct && spans; }
  /// Delta -> (zero-order part, derivation part); the zero-order part is
  /// a -> a Delta(1), or a -> Delta(1) a for the graded and dv_right flavors.
  std::pair<Matrix, Matrix> split(const HomSpace& h, const Matrix& delta, SplitFlavor flavor) const;
};
/// h must have the regular bimodule as source. Throws InvalidArgument when
/// the flavor needs properties the algebra lacks.
FirstOrderSplit first_order_decomposition(const HomSpace& h, const Subspace& diff1, SplitFlavor flavor);

}  // namespace ncdiff
