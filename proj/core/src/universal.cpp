#include "ncdiff/universal.hpp"

#include "ncdiff/derivations.hpp"
#include "ncdiff/errors.hpp"

namespace ncdiff {

namespace {

// op on the first tensor factor; the remaining factors have total size block
SparseMatrix on_first(const Matrix& op, std::size_t block) {
  SparseMatrix s(op.field(), op.rows() * block, op.cols() * block);
  for (std::size_t r = 0; r < op.rows(); ++r)
    for (std::size_t c = 0; c < op.cols(); ++c)
      if (op(r, c) != 0)
        for (std::size_t t = 0; t < block; ++t) s.add(r * block + t, c * block + t, op(r, c));
  s.compress();
  return s;
}

SparseMatrix on_last(const Matrix& op, std::size_t outer) {
  SparseMatrix s(op.field(), outer * op.rows(), outer * op.cols());
  for (std::size_t x = 0; x < outer; ++x)
    for (std::size_t r = 0; r < op.rows(); ++r)
      for (std::size_t c = 0; c < op.cols(); ++c)
        if (op(r, c) != 0) s.add(x * op.rows() + r, x * op.cols() + c, op(r, c));
  s.compress();
  return s;
}

std::vector<Vector> columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
  return out;
}

}  // namespace

Vector Calculus::multiply(const Vector& w, const Vector& w2) const {
  Vector out(algebra.field(), omega2.dim());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) out.add_scaled(w[i], product[i] * w2);
  return out;
}

ValidationReport Calculus::validate() const {
  ValidationReport rep;
  const FiniteAlgebra& a = algebra;
  const Field& f = a.field();
  const std::size_t n = a.dim(), m1 = omega1.dim(), m2 = omega2.dim();
  for (auto& s : omega1.validate().failures) rep.failures.push_back("omega1: " + s);
  for (auto& s : omega2.validate().failures) rep.failures.push_back("omega2: " + s);
  if (d0.rows() != m1 || d0.cols() != n || d1.rows() != m2 || d1.cols() != m1 || product.size() != m1) {
    rep.failures.push_back("shape mismatch");
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(d0 * a.multiply(a.basis(i), a.basis(j)) == omega1.right(j) * d0.column(i) + omega1.left(i) * d0.column(j)))
        rep.failures.push_back("d0 Leibniz fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  if (!(d1 * d0).is_zero()) rep.failures.push_back("d1 d0 != 0");
  std::vector<Vector> da = columns(d0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m1; ++j) {
      const Vector w = Vector::unit(f, m1, j);
      if (!(d1 * (omega1.left(i) * w) == multiply(da[i], w) + omega2.left(i) * (d1 * w)))
        rep.failures.push_back("d1 left Leibniz fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!(d1 * (omega1.right(i) * w) == omega2.right(i) * (d1 * w) - multiply(w, da[i])))
        rep.failures.push_back("d1 right Leibniz fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m1; ++j) {
      const Vector w = Vector::unit(f, m1, j);
      for (std::size_t k = 0; k < m1; ++k) {
        const Vector w2 = Vector::unit(f, m1, k);
        const Vector ww = multiply(w, w2);
        if (!(multiply(omega1.left(i) * w, w2) == omega2.left(i) * ww) ||
            !(multiply(w, omega1.right(i) * w2) == omega2.right(i) * ww) ||
            !(multiply(omega1.right(i) * w, w2) == multiply(w, omega1.left(i) * w2)))
          rep.failures.push_back("product not balanced at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")");
      }
    }
  }
  return rep;
}

bool Calculus::is_generated() const {
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < algebra.dim(); ++i)
    for (std::size_t j = 0; j < algebra.dim(); ++j) gens.push_back(omega1.left(i) * d0.column(j));
  return Subspace::span(algebra.field(), omega1.dim(), gens).is_full();
}

Calculus zero_calculus(const FiniteAlgebra& a) {
  Calculus c;
  c.name = "zero";
  c.algebra = a;
  c.omega1 = zero_module(a);
  c.omega2 = zero_module(a);
  c.d0 = Matrix(a.field(), 0, a.dim());
  c.d1 = Matrix(a.field(), 0, 0);
  return c;
}

Calculus ce_calculus(const CEComplex& ce, const MinimalCalculus& mc) {
  Calculus c;
  c.name = "ce-minimal";
  c.algebra = ce.algebra();
  c.omega1 = mc.o1.module;
  c.omega2 = mc.o2.module;
  c.d0 = mc.d0;
  c.d1 = mc.d1;
  const std::size_t m1 = mc.o1.module.dim();
  const Field& f = ce.algebra().field();
  for (std::size_t i = 0; i < m1; ++i) {
    const Vector wi = mc.o1.embed(Vector::unit(f, m1, i));
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < m1; ++j)
      cols.push_back(mc.o2.coordinates(ce.wedge(wi, 1, mc.o1.embed(Vector::unit(f, m1, j)), 1)));
    c.product.push_back(Matrix::from_columns(f, mc.o2.module.dim(), cols));
  }
  return c;
}

Vector UniversalForms::tensor(const Vector& a, const Vector& b) const {
  const std::size_t n = this->n();
  Vector out(algebra.field(), n * n);
  for (std::size_t p = 0; p < n; ++p)
    if (a[p] != 0)
      for (std::size_t q = 0; q < n; ++q)
        if (b[q] != 0) out.set(p * n + q, a[p] * b[q]);
  return out;
}

Vector UniversalForms::d_ambient(const Vector& a) const {
  return tensor(algebra.unit(), a) - tensor(a, algebra.unit());
}

Vector UniversalForms::left_ambient(const Vector& a, const Vector& w) const {
  const std::size_t n = this->n();
  return on_first(algebra.left_mult(a), w.size() / n).apply(w);
}

Vector UniversalForms::right_ambient(const Vector& w, const Vector& b) const {
  const std::size_t n = this->n();
  return on_last(algebra.right_mult(b), w.size() / n).apply(w);
}

Vector UniversalForms::product_ambient(const Vector& w, const Vector& w2) const {
  const std::size_t n = this->n();
  Vector out(algebra.field(), n * n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (w[p * n + q] == 0) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t r = 0; r < n; ++r) {
          if (w2[x * n + r] == 0) continue;
          const mpq_class c = w[p * n + q] * w2[x * n + r];
          for (std::size_t s = 0; s < n; ++s)
            if (algebra.sc(q, x, s) != 0) out.add_scaled_at((p * n + s) * n + r, c * algebra.sc(q, x, s));
        }
    }
  return out;
}

Vector UniversalForms::d1_ambient(const Vector& w) const {
  // d(x (x) y) = 1 (x) x (x) y - x (x) 1 (x) y + x (x) y (x) 1 on ker m
  const std::size_t n = this->n();
  const Vector& u = algebra.unit();
  Vector out(algebra.field(), n * n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const mpq_class& c = w[p * n + q];
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (u[k] == 0) continue;
        out.add_scaled_at((k * n + p) * n + q, c * u[k]);
        out.add_scaled_at((p * n + k) * n + q, -c * u[k]);
        out.add_scaled_at((p * n + q) * n + k, c * u[k]);
      }
    }
  return out;
}

UniversalForms universal_forms(const FiniteAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  UniversalForms u;
  u.algebra = a;
  std::vector<SparseMatrix> l1, r1, l2, r2;
  for (std::size_t i = 0; i < n; ++i) {
    l1.push_back(on_first(a.left_mult(i), n));
    r1.push_back(on_last(a.right_mult(i), n));
    l2.push_back(on_first(a.left_mult(i), n * n));
    r2.push_back(on_last(a.right_mult(i), n * n));
  }
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(u.d_ambient(a.basis(i)));
  std::vector<SparseMatrix> acts = l1;
  acts.insert(acts.end(), r1.begin(), r1.end());
  u.omega1 = closure(Subspace::span(f, n * n, gens), acts);

  Matrix mult(f, n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) mult.set(k, p * n + q, a.sc(p, q, k));
  u.kernel_m = kernel(mult);

  const std::vector<Vector> b1 = u.omega1.basis_vectors();
  EchelonBasis w2(f, n * n * n);
  for (const auto& x : b1)
    for (const auto& y : b1) w2.insert(u.product_ambient(x, y));
  u.omega2 = Subspace::from_echelon(w2);

  Calculus& c = u.calculus;
  c.name = "universal";
  c.algebra = a;
  c.omega1 = restrict_module(a, "Omega1", u.omega1, l1, r1).module;
  c.omega2 = restrict_module(a, "Omega2", u.omega2, l2, r2).module;
  std::vector<Vector> cols0, cols1;
  for (const auto& g : gens) cols0.push_back(u.omega1.coordinates(g));
  for (const auto& x : b1) cols1.push_back(u.omega2.coordinates(u.d1_ambient(x)));
  c.d0 = Matrix::from_columns(f, b1.size(), cols0);
  c.d1 = Matrix::from_columns(f, u.omega2.dim(), cols1);
  for (const auto& x : b1) {
    std::vector<Vector> cols;
    for (const auto& y : b1) cols.push_back(u.omega2.coordinates(u.product_ambient(x, y)));
    c.product.push_back(Matrix::from_columns(f, u.omega2.dim(), cols));
  }
  return u;
}

bool universal_relation_holds(const UniversalForms& u) {
  const FiniteAlgebra& a = u.algebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector ei = a.basis(i), ej = a.basis(j);
      if (!(u.right_ambient(u.d_ambient(ei), ej) == u.d_ambient(a.multiply(ei, ej)) - u.left_ambient(ei, u.d_ambient(ej))))
        return false;
    }
  return true;
}

bool juxtaposition_rule_holds(const UniversalForms& u) {
  const FiniteAlgebra& a = u.algebra;
  const std::size_t n = a.dim();
  std::vector<Vector> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(u.d_ambient(a.basis(i)));
  for (std::size_t a0 = 0; a0 < n; ++a0)
    for (std::size_t a1 = 0; a1 < n; ++a1) {
      const Vector lhs1 = u.left_ambient(a.basis(a0), d[a1]);
      const Vector a0a1 = a.multiply(a.basis(a0), a.basis(a1));
      for (std::size_t b0 = 0; b0 < n; ++b0)
        for (std::size_t b1 = 0; b1 < n; ++b1) {
          const Vector lhs = u.product_ambient(lhs1, u.left_ambient(a.basis(b0), d[b1]));
          const Vector rhs =
              u.left_ambient(a.basis(a0), u.product_ambient(u.d_ambient(a.multiply(a.basis(a1), a.basis(b0))), d[b1])) -
              u.left_ambient(a0a1, u.product_ambient(d[b0], d[b1]));
          if (!(lhs == rhs)) return false;
        }
    }
  return true;
}

Factorization universal_factorize(const UniversalForms& u, const Bimodule& p, const Matrix& delta) {
  const FiniteAlgebra& a = u.algebra;
  if (delta.rows() != p.dim() || delta.cols() != a.dim()) throw DimensionMismatch("derivation shape");
  if (!derivations(p).contains(delta)) throw NotMember("not a derivation into the target");
  const Calculus& c = u.calculus;
  const std::size_t rows = p.dim(), cols = c.omega1.dim(), n = a.dim();
  // sum x_i (x) y_i with sum x_i y_i = 0 equals sum x_i dy_i, so f sends it to sum x_i delta(y_i)
  Matrix f(a.field(), rows, cols);
  for (std::size_t i = 0; i < cols; ++i) {
    const Vector w = u.omega1.basis_vector(i);
    Vector col(a.field(), rows);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (w[x * n + y] != 0) col.add_scaled(w[x * n + y], p.left(x) * delta.column(y));
    f.set_column(i, col);
  }
  bool ok = f * c.d0 == delta;
  for (std::size_t i = 0; i < n && ok; ++i)
    ok = f * c.omega1.left(i) == p.left(i) * f && f * c.omega1.right(i) == p.right(i) * f;
  if (!ok) throw Error("no bimodule map factors the derivation");
  // any other solution differs by a bimodule map vanishing on dA
  std::vector<SparseMatrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.emplace_back(c.omega1.left(i));
  std::vector<Vector> da;
  for (std::size_t j = 0; j < n; ++j) da.push_back(c.d0.column(j));
  if (closure(Subspace::span(a.field(), cols, da), gens).is_full()) return {f, true};
  std::vector<LinearConstraint> cons;
  for (std::size_t i = 0; i < n; ++i) {
    cons.push_back({sylvester_rows(c.omega1.left(i), &p.left(i), rows, cols), Vector(a.field(), rows * cols)});
    cons.push_back({sylvester_rows(c.omega1.right(i), &p.right(i), rows, cols), Vector(a.field(), rows * cols)});
  }
  cons.push_back({sylvester_rows(c.d0, nullptr, rows, cols), Vector(a.field(), delta.rows() * delta.cols())});
  return {f, solve_affine(cons).homogeneous.is_zero()};
}

HomExtension extend_hom(const UniversalForms& u, const Matrix& rho, const Calculus& t) {
  const FiniteAlgebra& a = u.algebra;
  const FiniteAlgebra& b = t.algebra;
  const Field& f = a.field();
  const std::size_t n = a.dim();
  if (rho.rows() != b.dim() || rho.cols() != n) throw DimensionMismatch("rho shape");
  if (!(rho * a.unit() == b.unit())) throw InvalidArgument("rho is not unital");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(rho * a.multiply(a.basis(i), a.basis(j)) == b.multiply(rho.column(i), rho.column(j))))
        throw InvalidArgument("rho is not multiplicative");

  const Calculus& c = u.calculus;
  std::vector<Vector> dr, rr;
  std::vector<Matrix> l1, l2;
  for (std::size_t q = 0; q < n; ++q) {
    rr.push_back(rho.column(q));
    dr.push_back(t.d0 * rr[q]);
    l1.push_back(t.omega1.left_of(rr[q]));
    l2.push_back(t.omega2.left_of(rr[q]));
  }
  std::vector<Vector> cols1;
  for (const auto& w : u.omega1.basis_vectors()) {
    Vector out(f, t.omega1.dim());
    for (std::size_t p = 0; p < n; ++p) {
      Vector acc(f, t.omega1.dim());
      for (std::size_t q = 0; q < n; ++q)
        if (w[p * n + q] != 0) acc.add_scaled(w[p * n + q], dr[q]);
      if (!acc.is_zero()) out = out + l1[p] * acc;
    }
    cols1.push_back(out);
  }
  std::vector<Vector> prod(n * n);
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t r = 0; r < n; ++r) prod[q * n + r] = t.multiply(dr[q], dr[r]);
  std::vector<Vector> cols2;
  for (const auto& w : u.omega2.basis_vectors()) {
    Vector out(f, t.omega2.dim());
    for (std::size_t p = 0; p < n; ++p) {
      Vector acc(f, t.omega2.dim());
      for (std::size_t qr = 0; qr < n * n; ++qr)
        if (w[p * n * n + qr] != 0) acc.add_scaled(w[p * n * n + qr], prod[qr]);
      if (!acc.is_zero()) out = out + l2[p] * acc;
    }
    cols2.push_back(out);
  }
  HomExtension e;
  e.rho1 = Matrix::from_columns(f, t.omega1.dim(), cols1);
  e.rho2 = Matrix::from_columns(f, t.omega2.dim(), cols2);
  e.intertwines0 = e.rho1 * c.d0 == t.d0 * rho;
  e.intertwines1 = e.rho2 * c.d1 == t.d1 * e.rho1;
  const std::size_t m1 = c.omega1.dim(), m2 = c.omega2.dim();
  e.multiplicative = true;
  for (std::size_t i = 0; i < m1 && e.multiplicative; ++i)
    for (std::size_t j = 0; j < m1; ++j)
      if (!(e.rho2 * c.product[i].column(j) == t.multiply(cols1[i], cols1[j]))) {
        e.multiplicative = false;
        break;
      }
  e.bimodule_compatible = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix r1 = t.omega1.right_of(rr[k]), r2 = t.omega2.right_of(rr[k]);
    if (!(e.rho1 * c.omega1.left(k) == l1[k] * e.rho1) || !(e.rho1 * c.omega1.right(k) == r1 * e.rho1) ||
        (m2 > 0 && (!(e.rho2 * c.omega2.left(k) == l2[k] * e.rho2) || !(e.rho2 * c.omega2.right(k) == r2 * e.rho2))))
      e.bimodule_compatible = false;
  }
  e.surjective1 = rank(e.rho1) == t.omega1.dim();
  return e;
}

std::optional<CentralRelationWitness> central_relation_failure(const UniversalForms& u) {
  const std::vector<Vector> z = u.algebra.center().basis_vectors();
  for (const auto& a : z)
    for (const auto& a2 : z) {
      const Vector da2 = u.d_ambient(a2);
      const Vector diff = u.left_ambient(a, da2) - u.right_ambient(da2, a);
      if (!diff.is_zero()) return CentralRelationWitness{a, a2, diff};
    }
  return std::nullopt;
}

}  // namespace ncdiff
