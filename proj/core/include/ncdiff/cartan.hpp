#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncdiff/bimodule.hpp"
#include "ncdiff/diffops.hpp"

namespace ncdiff {

/// A one-sided dual of a degree-1 calculus (Q, d) together with the hat
/// map u -> u o d : A -> A.
///
/// Right pair: u(qa) = u(q)a, (bu)(q) = b u(q), (ub)(q) = u(bq). Relations:
///   (bu)^(a) = b u(da),   u^(ba) = u^(b) a + (ub)^(a).
/// Left pair: u(aq) = a u(q), (ub)(q) = u(q) b, (bu)(q) = u(qb). Relations:
///   (ub)^(a) = u(da) b,   u^(ab) = a u^(b) + (bu)^(a).
/// Dual elements live in Hom_K(Q, A), flat coordinate r * dim Q + c.
struct CartanPair {
  Side side = Side::right;
  Bimodule q;
  Matrix d;                ///< dim Q x dim A
  EmbeddedModule dual;

  std::size_t dim() const { return dual.module.dim(); }
  Matrix element(const Vector& coords) const;
  /// u o d for u given in dual coordinates.
  Matrix hat(const Vector& coords) const;
  Matrix hat_basis(std::size_t i) const;
  /// The two defining relations on every basis element and algebra basis pair.
  bool relations_hold() const;
};

/// Throws NotMember if d is not a derivation into q.
CartanPair build_cartan_pair(const Bimodule& q, const Matrix& d, Side side);

/// Delta(apb) - a Delta(pb) - Delta(ap) b + a Delta(p) b != 0 at basis indices.
struct DvWitness {
  std::size_t dual_index = 0;
  std::size_t a = 0, b = 0, p = 0;
  Vector value;
};

struct CartanEntry {
  bool derivation = false;
  bool dv_first_order = false;
  bool lunts_left1 = false;
  bool lunts_right1 = false;
  std::optional<bool> grothendieck1;   ///< commutative algebras only
};

struct CartanReport {
  std::vector<CartanEntry> entries;
  std::size_t dual_dim = 0;
  std::size_t two_sided_dim = 0;
  /// every u in the two-sided dual gives a dv first-order u^
  bool two_sided_dv = false;
  std::optional<DvWitness> witness;   ///< first failing (u, a, b, p), exhaustive order
};
CartanReport cartan_vs_definitions(const CartanPair& pair);

/// Left pair over A^op with Q^op against the right pair over A: same dual
/// subspace, same hats, relations hold on both.
bool cartan_mirror_holds(const Bimodule& q, const Matrix& d);

}  // namespace ncdiff
