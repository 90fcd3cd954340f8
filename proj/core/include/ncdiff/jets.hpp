#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncdiff/bimodule.hpp"
#include "ncdiff/universal.hpp"

namespace ncdiff {

/// J^k(P) = (A (x) P) / mu^{k+1}, or the two-sided first jets
/// (A (x) P (x) A) / mu^1.
///
/// Quotient coordinates are the ambient positions that are not pivots of
/// mu. For one-sided jets over a commutative algebra `jet` carries the
/// outer structure b(a (x) p) = ba (x) p on both sides (a central module),
/// and `inner` the bullet structure b.(a (x) p) = a (x) bp. Two-sided jets
/// carry the outer left and right actions.
struct JetModule {
  std::size_t order = 0;
  bool two_sided = false;
  Bimodule source;
  TensorModule ambient;
  Subspace mu;
  std::vector<std::size_t> free_coords;
  Bimodule jet;
  std::vector<Matrix> inner;
  Matrix j;  ///< dim J x dim P, p -> class of 1 (x) p (resp. 1 (x) p (x) 1)

  std::size_t dim() const { return free_coords.size(); }
  Vector project(const Vector& v) const;
  Vector lift(const Vector& c) const;
  Matrix induced(const Matrix& op) const;
};

/// Order cap 2; requires a commutative algebra.
JetModule jet_module(const Bimodule& p, std::size_t k);
JetModule two_sided_jet(const Bimodule& p);

/// J^k is a k-order operator into J^k(P) (two-sided: bar delta_c delta_b J = 0).
bool jk_is_diffop(const JetModule& jm);

/// A-linear (two-sided: bimodule) f: J -> Q with f J = delta. Throws
/// NotMember if delta is not in the represented operator space.
Factorization factorize(const JetModule& jm, const Bimodule& q, const Matrix& delta);

struct Representability {
  std::size_t hom_dim = 0;
  std::size_t diff_dim = 0;
  bool diff_roundtrip = false;   ///< delta -> f -> f J = delta on a basis
  bool hom_roundtrip = false;    ///< f -> f J -> factorize = f on a basis
  bool ok() const { return hom_dim == diff_dim && diff_roundtrip && hom_roundtrip; }
};
/// Hom_A(J^k(P), Q) against Diff_k(P, Q); two-sided: Hom_{A-A}(J^1(P), Q)
/// against the operators with bar delta_c delta_b = 0.
Representability representability(const JetModule& jm, const Bimodule& q);

/// Failure of delta_{b_0} ... delta_{b_k}(f J)(p) = f(delta^{b_0} ... delta^{b_k}(1 (x) p))
/// for left-linear f: A (x) P -> Q. Exhaustive over basis f, b-tuples and p.
struct LeftJetWitness {
  Matrix f;                       ///< dim Q x dim(A (x) P)
  std::vector<std::size_t> b;
  std::size_t p = 0;
  Vector difference;              ///< left side minus right side
};
std::optional<LeftJetWitness> left_jet_identity_failure(const Bimodule& p, const Bimodule& q, std::size_t k);

}  // namespace ncdiff
