#include "ncdiff/jets.hpp"

#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/homspace.hpp"

namespace ncdiff {

Vector JetModule::project(const Vector& v) const {
  const Vector r = mu.reduce(v);
  Vector out(r.field(), free_coords.size());
  for (std::size_t i = 0; i < free_coords.size(); ++i) out.set(i, r[free_coords[i]]);
  return out;
}

Vector JetModule::lift(const Vector& c) const {
  Vector out(c.field(), mu.ambient_dim());
  for (std::size_t i = 0; i < free_coords.size(); ++i) out.set(free_coords[i], c[i]);
  return out;
}

Matrix JetModule::induced(const Matrix& op) const {
  const Field& f = mu.field();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < dim(); ++i) cols.push_back(project(op * lift(Vector::unit(f, dim(), i))));
  return Matrix::from_columns(f, dim(), cols);
}

namespace {

void finish(JetModule& jm, const std::vector<Vector>& jcols_ambient) {
  const Field& f = jm.source.field();
  std::vector<bool> pivot(jm.mu.ambient_dim(), false);
  for (auto p : jm.mu.pivots()) pivot[p] = true;
  for (std::size_t i = 0; i < pivot.size(); ++i)
    if (!pivot[i]) jm.free_coords.push_back(i);
  std::vector<Vector> jcols;
  for (const auto& v : jcols_ambient) jcols.push_back(jm.project(v));
  jm.j = Matrix::from_columns(f, jm.dim(), jcols);
}

std::vector<SparseMatrix> sparse(const std::vector<Matrix>& ms) {
  std::vector<SparseMatrix> out;
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

}  // namespace

JetModule jet_module(const Bimodule& p, std::size_t k) {
  const FiniteAlgebra& a = p.algebra();
  if (!a.is_commutative()) throw InvalidArgument("jet modules need a commutative algebra");
  if (k > 2) throw InvalidArgument("jet order cap is 2");
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = p.dim();
  JetModule jm;
  jm.order = k;
  jm.source = p;
  jm.ambient = tensor_A_P(p);
  std::vector<SparseMatrix> deltas;
  for (std::size_t b = 0; b < n; ++b) deltas.emplace_back(jm.ambient.delta(b));
  Subspace s = Subspace::full(f, n * m);
  for (std::size_t r = 0; r <= k; ++r) {
    EchelonBasis img(f, n * m);
    for (const auto& d : deltas)
      for (const auto& v : image(d, s).basis_vectors()) img.insert(v);
    s = Subspace::from_echelon(img);
  }
  std::vector<SparseMatrix> acts = sparse(jm.ambient.outer.left_actions());
  for (const auto& m2 : jm.ambient.inner_left) acts.emplace_back(m2);
  jm.mu = closure(s, acts);
  std::vector<Vector> jcols;
  for (std::size_t q = 0; q < m; ++q) {
    Vector v(f, n * m);
    for (std::size_t x = 0; x < n; ++x)
      if (a.unit()[x] != 0) v.set(jm.ambient.index(x, q), a.unit()[x]);
    jcols.push_back(v);
  }
  finish(jm, jcols);
  std::vector<Matrix> outer;
  for (std::size_t b = 0; b < n; ++b) {
    outer.push_back(jm.induced(jm.ambient.outer.left(b)));
    jm.inner.push_back(jm.induced(jm.ambient.inner_left[b]));
  }
  jm.jet = Bimodule(a, "J" + std::to_string(k) + "(" + p.name() + ")", jm.dim(), outer, outer);
  return jm;
}

JetModule two_sided_jet(const Bimodule& p) {
  const FiniteAlgebra& a = p.algebra();
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = p.dim(), dim = n * m * n;
  JetModule jm;
  jm.order = 1;
  jm.two_sided = true;
  jm.source = p;
  jm.ambient = tensor_A_P_A(p);
  std::vector<Vector> ones;
  for (std::size_t q = 0; q < m; ++q) {
    Vector v(f, dim);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t c = 0; c < n; ++c)
        if (a.unit()[x] != 0 && a.unit()[c] != 0) v.set(jm.ambient.index(x, q, c), a.unit()[x] * a.unit()[c]);
    ones.push_back(v);
  }
  EchelonBasis gens(f, dim);
  for (std::size_t b = 0; b < n; ++b) {
    const Matrix db = jm.ambient.delta(b);
    for (std::size_t c = 0; c < n; ++c) {
      const Matrix bc = jm.ambient.bar_delta(c) * db;
      for (const auto& v : ones) gens.insert(bc * v);
    }
  }
  std::vector<SparseMatrix> acts = sparse(jm.ambient.outer.left_actions());
  for (const auto& r : jm.ambient.outer.right_actions()) acts.emplace_back(r);
  jm.mu = closure(Subspace::from_echelon(gens), acts);
  finish(jm, ones);
  std::vector<Matrix> left, right;
  for (std::size_t b = 0; b < n; ++b) {
    left.push_back(jm.induced(jm.ambient.outer.left(b)));
    right.push_back(jm.induced(jm.ambient.outer.right(b)));
  }
  jm.jet = Bimodule(a, "J1bar(" + p.name() + ")", jm.dim(), left, right);
  return jm;
}

bool jk_is_diffop(const JetModule& jm) {
  const HomSpace h(jm.source, jm.jet);
  if (!jm.two_sided) return h.iterated_delta_vanishes(jm.j, jm.order);
  const Vector flat = h.flatten(jm.j);
  for (const auto& d : h.deltas()) {
    const Vector v = d.apply(flat);
    for (const auto& bd : h.bar_deltas())
      if (!bd.apply(v).is_zero()) return false;
  }
  return true;
}

namespace {

Subspace represented_space(const JetModule& jm, const Bimodule& q) {
  const HomSpace h(jm.source, q);
  return jm.two_sided ? dv_first_order(h).space : grothendieck_diff(h, jm.order).space;
}

Subspace jet_homs(const JetModule& jm, const Bimodule& q) {
  const HomSpace h(jm.jet, q);
  return jm.two_sided ? bimodule_maps(h) : left_zero_order(h);
}

}  // namespace

namespace {

Factorization factorize_in(const JetModule& jm, const Bimodule& q, const Subspace& diffs, const Subspace& homs,
                           const Matrix& delta) {
  const HomSpace hd(jm.source, q), hj(jm.jet, q);
  if (delta.rows() != q.dim() || delta.cols() != jm.source.dim()) throw DimensionMismatch("operator shape");
  if (!diffs.contains(hd.flatten(delta))) throw NotMember("operator is not represented by this jet module");
  std::vector<Vector> cols;
  for (const auto& b : homs.basis_vectors()) cols.push_back(hd.flatten(hj.unflatten(b) * jm.j));
  const LinearConstraint c{Matrix::from_columns(q.field(), hd.dim(), cols), hd.flatten(delta)};
  const AffineSolution sol = solve_affine(std::span<const LinearConstraint>(&c, 1));
  if (!sol.consistent) throw Error("no module map factors the operator");
  return {hj.unflatten(homs.from_coordinates(sol.particular)), sol.homogeneous.is_zero()};
}

}  // namespace

Factorization factorize(const JetModule& jm, const Bimodule& q, const Matrix& delta) {
  return factorize_in(jm, q, represented_space(jm, q), jet_homs(jm, q), delta);
}

Representability representability(const JetModule& jm, const Bimodule& q) {
  const HomSpace hd(jm.source, q), hj(jm.jet, q);
  const Subspace diffs = represented_space(jm, q);
  const Subspace homs = jet_homs(jm, q);
  Representability r;
  r.hom_dim = homs.dim();
  r.diff_dim = diffs.dim();
  r.diff_roundtrip = true;
  for (const auto& v : diffs.basis_vectors()) {
    const Matrix delta = hd.unflatten(v);
    const Factorization fz = factorize_in(jm, q, diffs, homs, delta);
    if (!fz.unique || !(fz.f * jm.j == delta)) r.diff_roundtrip = false;
  }
  r.hom_roundtrip = true;
  for (const auto& v : homs.basis_vectors()) {
    const Matrix fm = hj.unflatten(v);
    const Matrix delta = fm * jm.j;
    if (!diffs.contains(hd.flatten(delta)) || !(factorize_in(jm, q, diffs, homs, delta).f == fm)) r.hom_roundtrip = false;
  }
  return r;
}

std::optional<LeftJetWitness> left_jet_identity_failure(const Bimodule& p, const Bimodule& q, std::size_t k) {
  const FiniteAlgebra& a = p.algebra();
  const Field& fld = a.field();
  const std::size_t n = a.dim(), m = p.dim();
  const TensorModule t = tensor_A_P(p);
  const HomSpace hf(t.outer, q), hd(p, q);
  const Subspace fs = left_zero_order(hf);
  Matrix jm(fld, n * m, m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t r = 0; r < m; ++r)
      if (a.unit()[x] != 0) jm.set(t.index(x, r), r, a.unit()[x]);
  std::vector<Matrix> tdelta;
  for (std::size_t b = 0; b < n; ++b) tdelta.push_back(t.delta(b));
  for (const auto& fv : fs.basis_vectors()) {
    const Matrix f = hf.unflatten(fv);
    const Vector delta = hd.flatten(f * jm);
    std::vector<std::size_t> b(k + 1, 0);
    for (;;) {
      Vector lhs = delta;
      for (std::size_t i = b.size(); i-- > 0;) lhs = hd.deltas()[b[i]].apply(lhs);
      const Matrix lm = hd.unflatten(lhs);
      Matrix rm = jm;
      for (std::size_t i = b.size(); i-- > 0;) rm = tdelta[b[i]] * rm;
      rm = f * rm;
      for (std::size_t pc = 0; pc < m; ++pc) {
        const Vector diff = lm.column(pc) - rm.column(pc);
        if (!diff.is_zero()) return LeftJetWitness{f, b, pc, diff};
      }
      std::size_t pos = b.size();
      while (pos > 0 && ++b[pos - 1] == n) b[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

}  // namespace ncdiff
