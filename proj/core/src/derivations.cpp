#include "ncdiff/derivations.hpp"

#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"

namespace ncdiff {

std::vector<Matrix> DerivationSpace::basis_maps() const {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_map(i));
  return out;
}

namespace {

// Leibniz rows for maps of parity `par` (ignored when !graded).
Subspace leibniz_solve(const Bimodule& q, bool graded, int par) {
  const FiniteAlgebra& a = q.algebra();
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = q.dim(), dim = n * m;
  auto at = [n](std::size_t r, std::size_t c) { return r * n + c; };
  EchelonBasis rows(f, dim);
  if (graded) {
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((q.parity_of(r) + a.parity_of(c)) % 2 != par) rows.insert(Vector::unit(f, dim, at(r, c)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const bool flip = graded && a.parity_of(i) * par % 2 == 1;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0; r < m; ++r) {
        Vector row(f, dim);
        for (std::size_t k = 0; k < n; ++k)
          if (a.sc(i, j, k) != 0) row.add_scaled_at(at(r, k), a.sc(i, j, k));
        for (std::size_t s = 0; s < m; ++s) {
          if (q.right(j)(r, s) != 0) row.add_scaled_at(at(s, i), -q.right(j)(r, s));
          if (q.left(i)(r, s) != 0) row.add_scaled_at(at(s, j), flip ? q.left(i)(r, s) : mpq_class(-q.left(i)(r, s)));
        }
        rows.insert(row);
      }
    }
  }
  return kernel_of_rows(rows);
}

}  // namespace

DerivationSpace derivations(const Bimodule& q, bool graded) {
  const FiniteAlgebra& a = q.algebra();
  DerivationSpace d;
  d.graded = graded;
  d.target_dim = q.dim();
  d.algebra_dim = a.dim();
  if (!graded) {
    d.space = leibniz_solve(q, false, 0);
    d.parities.assign(d.space.dim(), 0);
    return d;
  }
  if (!a.is_graded() || !q.is_graded()) throw InvalidArgument("graded derivations need parities");
  if (a.field().characteristic() == 2) throw InvalidArgument("graded operations refuse characteristic 2");
  const Subspace even = leibniz_solve(q, true, 0);
  const Subspace odd = leibniz_solve(q, true, 1);
  d.space = sum(even, odd);
  for (std::size_t i = 0; i < d.space.dim(); ++i) d.parities.push_back(even.contains(d.space.basis_vector(i)) ? 0 : 1);
  return d;
}

DerivationSpace derivations(const FiniteAlgebra& a, bool graded) { return derivations(regular_bimodule(a), graded); }

std::optional<int> map_parity(const FiniteAlgebra& a, const Matrix& u) {
  std::optional<int> par;
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) {
      if (u(r, c) == 0) continue;
      const int p = (a.parity_of(r) + a.parity_of(c)) % 2;
      if (par && *par != p) return std::nullopt;
      par = p;
    }
  }
  return par;
}

Matrix lie_bracket(const FiniteAlgebra& a, const Matrix& u, const Matrix& v) {
  const DerivationSpace d = derivations(a);
  if (!d.contains(u) || !d.contains(v)) throw NotMember("bracket arguments must be derivations");
  return u * v - v * u;
}

Matrix super_bracket(const FiniteAlgebra& a, const Matrix& u, const Matrix& v) {
  const DerivationSpace d = derivations(a, true);
  if (!d.contains(u) || !d.contains(v)) throw NotMember("bracket arguments must be graded derivations");
  const auto pu = map_parity(a, u), pv = map_parity(a, v);
  if (u.is_zero() || v.is_zero()) return Matrix(a.field(), a.dim(), a.dim());
  if (!pu || !pv) throw InvalidArgument("super bracket needs homogeneous derivations");
  return *pu * *pv % 2 ? u * v + v * u : u * v - v * u;
}

FirstOrderSplit first_order_decomposition(const HomSpace& h, const Subspace& diff1, SplitFlavor flavor) {
  const FiniteAlgebra& a = h.algebra();
  if (h.source().dim() != a.dim()) throw InvalidArgument("first-order split needs the regular bimodule as source");
  FirstOrderSplit s;
  switch (flavor) {
    case SplitFlavor::commutative:
      if (!a.is_commutative()) throw InvalidArgument("commutative split on a noncommutative algebra");
      s.zero_order = grothendieck_diff(h, 0).space;
      s.derivation_part = derivations(h.target()).space;
      break;
    case SplitFlavor::graded:
      s.zero_order = graded_diff(h, 0).space;
      s.derivation_part = derivations(h.target(), true).space;
      break;
    case SplitFlavor::dv_left:
      s.zero_order = left_zero_order(h);
      s.derivation_part = derivations(h.target()).space;
      break;
    case SplitFlavor::dv_right:
      s.zero_order = right_zero_order(h);
      s.derivation_part = derivations(h.target()).space;
      break;
  }
  s.direct = intersect(s.zero_order, s.derivation_part).is_zero();
  s.spans = sum(s.zero_order, s.derivation_part) == diff1;
  return s;
}

std::pair<Matrix, Matrix> FirstOrderSplit::split(const HomSpace& h, const Matrix& delta, SplitFlavor flavor) const {
  const FiniteAlgebra& a = h.algebra();
  const Bimodule& q = h.target();
  const Vector d1 = delta * a.unit();
  Matrix zero(a.field(), q.dim(), a.dim());
  for (std::size_t c = 0; c < a.dim(); ++c) {
    const bool from_right = flavor == SplitFlavor::dv_right || flavor == SplitFlavor::graded;
    const Vector col = from_right ? q.right(c) * d1 : q.left(c) * d1;
    zero.set_column(c, col);
  }
  return {zero, delta - zero};
}

}  // namespace ncdiff
