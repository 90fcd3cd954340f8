#include "ncdiff/cartan.hpp"

#include "ncdiff/derivations.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/homspace.hpp"

namespace ncdiff {

Matrix CartanPair::element(const Vector& coords) const {
  return Matrix::unflatten(dual.embed(coords), q.algebra().dim(), q.dim());
}

Matrix CartanPair::hat(const Vector& coords) const { return element(coords) * d; }

Matrix CartanPair::hat_basis(std::size_t i) const { return hat(Vector::unit(q.field(), dim(), i)); }

bool CartanPair::relations_hold() const {
  const FiniteAlgebra& a = q.algebra();
  const std::size_t n = a.dim();
  const Field& f = a.field();
  // dual.module.left = the "bu" action, right = "ub" for both sides
  for (std::size_t i = 0; i < dim(); ++i) {
    const Vector u = Vector::unit(f, dim(), i);
    const Matrix uh = hat(u);
    const Matrix ud = element(u) * d;
    for (std::size_t b = 0; b < n; ++b) {
      const Matrix bu = hat(dual.module.left(b) * u);
      const Matrix ub = hat(dual.module.right(b) * u);
      for (std::size_t x = 0; x < n; ++x) {
        const Vector ex = a.basis(x), eb = a.basis(b);
        if (side == Side::right) {
          if (!(bu.column(x) == a.left_mult(b) * ud.column(x))) return false;
          if (!(uh * a.multiply(eb, ex) == a.right_mult(x) * uh.column(b) + ub.column(x))) return false;
        } else {
          if (!(ub.column(x) == a.right_mult(b) * ud.column(x))) return false;
          if (!(uh * a.multiply(ex, eb) == a.left_mult(x) * uh.column(b) + bu.column(x))) return false;
        }
      }
    }
  }
  return true;
}

CartanPair build_cartan_pair(const Bimodule& q, const Matrix& d, Side side) {
  if (d.rows() != q.dim() || d.cols() != q.algebra().dim()) throw DimensionMismatch("d shape");
  if (!derivations(q).contains(d)) throw NotMember("d is not a derivation into Q");
  CartanPair p;
  p.side = side;
  p.q = q;
  p.d = d;
  p.dual = side == Side::right ? right_dual(q) : left_dual(q);
  return p;
}

namespace {

std::optional<DvWitness> dv_failure(const FiniteAlgebra& a, const Matrix& delta, std::size_t idx) {
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t p = 0; p < n; ++p) {
        const Vector ea = a.basis(x), eb = a.basis(y), ep = a.basis(p);
        const Vector pb = a.multiply(ep, eb), ap = a.multiply(ea, ep);
        const Vector v = delta * a.multiply(ap, eb) - a.multiply(ea, delta * pb) - a.multiply(delta * ap, eb) +
                         a.multiply(a.multiply(ea, delta * ep), eb);
        if (!v.is_zero()) return DvWitness{idx, x, y, p, v};
      }
  return std::nullopt;
}

}  // namespace

CartanReport cartan_vs_definitions(const CartanPair& pair) {
  const FiniteAlgebra& a = pair.q.algebra();
  const Bimodule reg = regular_bimodule(a);
  const HomSpace h(reg, reg);
  const DerivationSpace der = derivations(reg);
  const Subspace dv = dv_first_order(h).space;
  const Subspace l1 = lunts_filtration(h, 1, Side::left)[1];
  const Subspace r1 = lunts_filtration(h, 1, Side::right)[1];
  std::optional<Subspace> g1;
  if (a.is_commutative()) g1 = grothendieck_diff(h, 1).space;

  CartanReport rep;
  rep.dual_dim = pair.dim();
  for (std::size_t i = 0; i < pair.dim(); ++i) {
    const Matrix uh = pair.hat_basis(i);
    const Vector flat = h.flatten(uh);
    CartanEntry e;
    e.derivation = der.contains(uh);
    e.dv_first_order = dv.contains(flat);
    e.lunts_left1 = l1.contains(flat);
    e.lunts_right1 = r1.contains(flat);
    if (g1) e.grothendieck1 = g1->contains(flat);
    if (!e.dv_first_order && !rep.witness) rep.witness = dv_failure(a, uh, i);
    rep.entries.push_back(e);
  }
  const Subspace two = intersect(right_dual(pair.q).carrier, left_dual(pair.q).carrier);
  rep.two_sided_dim = two.dim();
  rep.two_sided_dv = true;
  for (const auto& v : two.basis_vectors()) {
    const Matrix uh = Matrix::unflatten(v, a.dim(), pair.q.dim()) * pair.d;
    if (!dv.contains(h.flatten(uh))) rep.two_sided_dv = false;
  }
  return rep;
}

bool cartan_mirror_holds(const Bimodule& q, const Matrix& d) {
  const CartanPair right = build_cartan_pair(q, d, Side::right);
  const CartanPair left = build_cartan_pair(opposite(q), d, Side::left);
  if (!(right.dual.carrier == left.dual.carrier)) return false;
  for (std::size_t i = 0; i < right.dim(); ++i)
    if (!(right.hat_basis(i) == left.hat_basis(i))) return false;
  return right.relations_hold() && left.relations_hold();
}

}  // namespace ncdiff
