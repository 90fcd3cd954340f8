#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ncdiff/matrix.hpp"

namespace ncdiff {

struct RrefResult {
  Matrix reduced;                     ///< same shape as the input; zero rows last
  std::vector<std::size_t> pivots;    ///< pivot column of each nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Incrementally maintained reduced row-echelon basis. Inserting a vector
/// keeps every stored row fully reduced, so the pivot coordinates of a
/// member are its coordinates in this basis.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  /// Adds v to the span; returns false if v was already in it.
  bool insert(const Vector& v);
  /// Replaces v with its normal form modulo the span.
  void reduce(Vector& v) const;
  bool contains(const Vector& v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  const Field& field() const { return field_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;           // sorted by pivot
  std::vector<std::size_t> pivots_;
};

/// A linear subspace of K^n stored by its canonical reduced echelon basis.
/// Two subspaces are equal iff their basis matrices are identical.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);
  static Subspace span(Field field, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace from_echelon(const EchelonBasis& basis);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  bool is_zero() const { return pivots_.empty(); }
  bool is_full() const { return dim() == ambient_; }

  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Normal form of v modulo this subspace (pivot entries cleared).
  Vector reduce(const Vector& v) const;
  /// Coordinates of a member in the canonical basis. Throws NotMember.
  Vector coordinates(const Vector& v) const;
  /// Inverse of coordinates().
  Vector from_coordinates(const Vector& c) const;
  /// Reduced row space as an incremental basis (for further insertion).
  EchelonBasis echelon() const;
  /// {w : <w, v> = 0 for all v in this}.
  Subspace annihilator() const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
Subspace kernel(const SparseMatrix& m);
/// Kernel of the matrix whose rows span the given echelon basis.
Subspace kernel_of_rows(const EchelonBasis& rows);

/// Throws DimensionMismatch when the ambient dimensions differ.
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& a, const Vector& v);

/// Coset representatives of ambient / sub, taken greedily from the basis of
/// ambient in order. Throws InvalidArgument if sub is not inside ambient.
std::vector<Vector> quotient_basis(const Subspace& ambient, const Subspace& sub);

/// The set relation between two subspaces of the same ambient space.
enum class Inclusion { equal, subset, superset, incomparable };
Inclusion compare(const Subspace& a, const Subspace& b);
const char* to_string(Inclusion r);

/// Rows of X -> X m - nx X acting on X flattened row-major (rows x cols);
/// nx may be null.
Matrix sylvester_rows(const Matrix& m, const Matrix* nx, std::size_t rows, std::size_t cols);

struct LinearConstraint {
  Matrix lhs;
  Vector rhs;
};

/// Solution set {x : lhs_i x = rhs_i for all i}.
struct AffineSolution {
  bool consistent = false;
  Vector particular;        ///< valid only when consistent
  Subspace homogeneous;     ///< kernel of the stacked system
};
AffineSolution solve_affine(std::span<const LinearConstraint> constraints);

/// Image of a subspace under a linear map.
Subspace image(const SparseMatrix& op, const Subspace& s);
Subspace image(const Matrix& op, const Subspace& s);
/// {v : op v in target for every op}.
Subspace preimage(std::span<const SparseMatrix> ops, const Subspace& target);
/// Smallest subspace containing start and stable under every generator.
Subspace closure(const Subspace& start, std::span<const SparseMatrix> generators);

/// Matrix of op restricted to an op-stable subspace, in canonical
/// coordinates on both sides. Throws NotMember if s is not stable.
Matrix restrict_operator(const SparseMatrix& op, const Subspace& s);

}  // namespace ncdiff
