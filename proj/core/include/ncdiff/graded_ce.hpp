#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ncdiff/derivations.hpp"

namespace ncdiff {

/// Graded Chevalley-Eilenberg cochains of a graded commutative algebra.
///
/// Derivation basis vectors are homogeneous; a cochain is stored on normal
/// tuples only: even generators first in strictly increasing order, then
/// odd generators in weakly increasing order. Values on other tuples follow
/// from graded alternation c(.., x, y, ..) = -(-1)^{[x][y]} c(.., y, x, ..).
/// A degree-k cochain has coordinate tuple_index * n + t.
///
/// The coboundary on a normal tuple (e_1..e_r, o_1..o_s) is
///   sum_i (-1)^{i-1} e_i c(.. ^e_i ..)
/// + sum_j (-1)^r o_j c(.. ^o_j ..)
/// + sum_{i<j} (-1)^{i+j} c([e_i, e_j], ..)
/// - sum_{i<j} c([o_i, o_j], ..)
/// + sum_{i, j} (-1)^{i+r+1} c([e_i, o_j], ..)
/// with 1-based i, j and the super bracket.
class GradedCEComplex {
 public:
  explicit GradedCEComplex(const FiniteAlgebra& a, std::size_t max_degree = 2);

  const FiniteAlgebra& algebra() const { return a_; }
  const DerivationSpace& derivations() const { return der_; }
  std::size_t derivation_dim() const { return u_.size(); }
  int derivation_parity(std::size_t l) const { return der_.parities[l]; }
  std::size_t max_degree() const { return max_degree_; }

  const std::vector<std::vector<std::size_t>>& tuples(std::size_t k) const { return tuples_.at(k); }
  std::size_t cochain_dim(std::size_t k) const { return tuples_.at(k).size() * a_.dim(); }
  /// Sign and normal form of a tuple; sign 0 when the tuple repeats an even generator.
  std::pair<int, std::vector<std::size_t>> normal(const std::vector<std::size_t>& tuple) const;
  Vector evaluate(const Vector& c, const std::vector<std::size_t>& tuple) const;

  const SparseMatrix& coboundary(std::size_t k) const { return d_.at(k); }
  Vector d(const Vector& c, std::size_t k) const { return coboundary(k).apply(c); }
  /// A-linear cochains: c(a u, ...) = a c(u, ...), unsigned.
  const Subspace& linear_forms(std::size_t k) const { return forms_.at(k); }

  bool dd_vanishes(std::size_t k) const;
  bool d_preserves_forms(std::size_t k) const;

 private:
  void build_tuples();
  void build_coboundary(std::size_t k);
  void build_forms(std::size_t k);
  std::size_t tuple_index(std::size_t k, const std::vector<std::size_t>& t) const;

  FiniteAlgebra a_;
  std::size_t max_degree_;
  DerivationSpace der_;
  std::vector<Matrix> u_;
  std::vector<Vector> bracket_;
  std::vector<std::vector<std::vector<std::size_t>>> tuples_;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index_;
  std::vector<SparseMatrix> d_;
  std::vector<Subspace> forms_;
};

}  // namespace ncdiff
