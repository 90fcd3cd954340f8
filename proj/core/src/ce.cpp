#include "ncdiff/ce.hpp"

#include <bit>

#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"

namespace ncdiff {

namespace {

std::vector<std::size_t> digits(std::size_t block, std::size_t m, std::size_t k) {
  std::vector<std::size_t> t(k);
  for (std::size_t p = k; p-- > 0;) {
    t[p] = block % m;
    block /= m;
  }
  return t;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// block-diagonal action of an n x n matrix on every value block
SparseMatrix blockwise(const Matrix& m, std::size_t blocks) {
  const std::size_t n = m.rows();
  SparseMatrix s(m.field(), blocks * n, blocks * n);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m(r, c) != 0) s.add(b * n + r, b * n + c, m(r, c));
  s.compress();
  return s;
}

}  // namespace

CEComplex::CEComplex(const FiniteAlgebra& a, std::size_t max_degree)
    : a_(a), max_degree_(max_degree), der_(ncdiff::derivations(a)) {
  if (max_degree_ < 1) throw InvalidArgument("CE complex needs max_degree >= 1");
  u_ = der_.basis_maps();
  const std::size_t m = u_.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) bracket_.push_back(der_.coordinates(u_[i] * u_[j] - u_[j] * u_[i]));
  for (std::size_t k = 0; k <= max_degree_; ++k) build_forms(k);
  for (std::size_t k = 0; k < max_degree_; ++k) build_coboundary(k);
}

std::size_t CEComplex::cochain_dim(std::size_t k) const { return ipow(u_.size(), k) * a_.dim(); }

std::size_t CEComplex::block(const std::vector<std::size_t>& tuple) const {
  std::size_t b = 0;
  for (auto i : tuple) b = b * u_.size() + i;
  return b;
}

const Subspace& CEComplex::forms(std::size_t k) const {
  if (k > max_degree_) throw InvalidArgument("form degree exceeds the configured cap");
  return forms_[k];
}

const SparseMatrix& CEComplex::coboundary(std::size_t k) const {
  if (k >= max_degree_) throw InvalidArgument("coboundary degree exceeds the configured cap");
  return d_[k];
}

void CEComplex::build_forms(std::size_t k) {
  const Field& f = a_.field();
  const std::size_t n = a_.dim(), m = u_.size(), dim = cochain_dim(k);
  if (k == 0 || dim == 0) {
    forms_.push_back(Subspace::full(f, dim));
    return;
  }
  // z u_i in the derivation basis, for z in a basis of the center
  const Subspace center = a_.center();
  std::vector<Matrix> zl;
  std::vector<std::vector<Vector>> zcoords;
  for (std::size_t z = 0; z < center.dim(); ++z) {
    const Matrix lz = a_.left_mult(center.basis_vector(z));
    zl.push_back(lz);
    zcoords.emplace_back();
    for (std::size_t i = 0; i < m; ++i) zcoords.back().push_back(der_.coordinates(lz * u_[i]));
  }
  EchelonBasis rows(f, dim);
  const std::size_t blocks = ipow(m, k);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto tup = digits(b, m, k);
    for (std::size_t p = 0; p + 1 < k; ++p) {
      auto sw = tup;
      std::swap(sw[p], sw[p + 1]);
      const std::size_t bs = block(sw);
      for (std::size_t t = 0; t < n; ++t) {
        Vector row(f, dim);
        row.add_scaled_at(b * n + t, 1);
        row.add_scaled_at(bs * n + t, 1);
        rows.insert(row);
      }
    }
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t z = 0; z < zl.size(); ++z) {
        const Vector& c = zcoords[z][tup[s]];
        for (std::size_t t = 0; t < n; ++t) {
          Vector row(f, dim);
          auto tl = tup;
          for (std::size_t l = 0; l < m; ++l) {
            if (c[l] == 0) continue;
            tl[s] = l;
            row.add_scaled_at(block(tl) * n + t, c[l]);
          }
          for (std::size_t t2 = 0; t2 < n; ++t2)
            if (zl[z](t, t2) != 0) row.add_scaled_at(b * n + t2, -zl[z](t, t2));
          rows.insert(row);
        }
      }
    }
  }
  forms_.push_back(kernel_of_rows(rows));
}

void CEComplex::build_coboundary(std::size_t k) {
  const std::size_t n = a_.dim(), m = u_.size();
  SparseMatrix d(a_.field(), cochain_dim(k + 1), cochain_dim(k));
  const std::size_t blocks = ipow(m, k + 1);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto tup = digits(b, m, k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      std::vector<std::size_t> rest = tup;
      rest.erase(rest.begin() + i);
      const std::size_t br = block(rest);
      const mpq_class sign = i % 2 ? -1 : 1;
      const Matrix& ui = u_[tup[i]];
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t s = 0; s < n; ++s)
          if (ui(t, s) != 0) d.add(b * n + t, br * n + s, sign * ui(t, s));
    }
    for (std::size_t i = 0; i <= k; ++i) {
      for (std::size_t j = i + 1; j <= k; ++j) {
        const Vector& c = bracket(tup[i], tup[j]);
        std::vector<std::size_t> rest;
        rest.push_back(0);
        for (std::size_t p = 0; p <= k; ++p)
          if (p != i && p != j) rest.push_back(tup[p]);
        const mpq_class sign = (i + j) % 2 ? -1 : 1;
        for (std::size_t l = 0; l < m; ++l) {
          if (c[l] == 0) continue;
          rest[0] = l;
          const std::size_t br = block(rest);
          for (std::size_t t = 0; t < n; ++t) d.add(b * n + t, br * n + t, sign * c[l]);
        }
      }
    }
  }
  d.compress();
  d_.push_back(std::move(d));
}

Vector CEComplex::evaluate(const Vector& phi, const std::vector<std::size_t>& tuple) const {
  const std::size_t n = a_.dim();
  if (phi.size() != cochain_dim(tuple.size())) throw DimensionMismatch("cochain degree does not match the tuple");
  const std::size_t b = block(tuple);
  Vector out(a_.field(), n);
  for (std::size_t t = 0; t < n; ++t) out.set(t, phi[b * n + t]);
  return out;
}

Vector CEComplex::wedge(const Vector& phi, std::size_t r, const Vector& psi, std::size_t s) const {
  if (r + s > max_degree_) throw InvalidArgument("wedge degree exceeds the configured cap");
  if (phi.size() != cochain_dim(r) || psi.size() != cochain_dim(s)) throw DimensionMismatch("wedge operand degree");
  const std::size_t n = a_.dim(), m = u_.size(), k = r + s;
  Vector out(a_.field(), cochain_dim(k));
  const std::size_t blocks = ipow(m, k);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto tup = digits(b, m, k);
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
      std::vector<std::size_t> first, second;
      int inversions = 0;
      for (std::size_t p = 0; p < k; ++p) {
        if (mask >> p & 1) {
          first.push_back(tup[p]);
          inversions += static_cast<int>(second.size());
        } else {
          second.push_back(tup[p]);
        }
      }
      const Vector prod = a_.multiply(evaluate(phi, first), evaluate(psi, second));
      const mpq_class sign = inversions % 2 ? -1 : 1;
      for (std::size_t t = 0; t < n; ++t)
        if (prod[t] != 0) out.add_scaled_at(b * n + t, sign * prod[t]);
    }
  }
  return out;
}

Vector CEComplex::left_act(const Vector& a, const Vector& phi, std::size_t k) const {
  return blockwise(a_.left_mult(a), ipow(u_.size(), k)).apply(phi);
}

Vector CEComplex::right_act(const Vector& phi, const Vector& b, std::size_t k) const {
  return blockwise(a_.right_mult(b), ipow(u_.size(), k)).apply(phi);
}

bool CEComplex::dd_vanishes(std::size_t k) const {
  for (std::size_t i = 0; i < forms(k).dim(); ++i)
    if (!d(d(forms(k).basis_vector(i), k), k + 1).is_zero()) return false;
  return true;
}

bool CEComplex::d_preserves_forms(std::size_t k) const {
  for (std::size_t i = 0; i < forms(k).dim(); ++i)
    if (!forms(k + 1).contains(d(forms(k).basis_vector(i), k))) return false;
  return true;
}

EmbeddedModule CEComplex::form_module(std::size_t k) const {
  const std::size_t blocks = ipow(u_.size(), k);
  std::vector<SparseMatrix> left, right;
  for (std::size_t i = 0; i < a_.dim(); ++i) {
    left.push_back(blockwise(a_.left_mult(i), blocks));
    right.push_back(blockwise(a_.right_mult(i), blocks));
  }
  return restrict_module(a_, "O^" + std::to_string(k), forms(k), left, right);
}

MinimalCalculus minimal_calculus(const CEComplex& ce) {
  if (ce.max_degree() < 2) throw InvalidArgument("minimal calculus needs max_degree >= 2");
  const FiniteAlgebra& a = ce.algebra();
  const Field& f = a.field();
  std::vector<SparseMatrix> l1, r1, l2, r2;
  const std::size_t m = ce.derivation_dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l1.push_back(blockwise(a.left_mult(i), m));
    r1.push_back(blockwise(a.right_mult(i), m));
    l2.push_back(blockwise(a.left_mult(i), m * m));
    r2.push_back(blockwise(a.right_mult(i), m * m));
  }
  std::vector<Vector> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(ce.da(a.basis(i)));
  std::vector<SparseMatrix> acts1 = l1;
  acts1.insert(acts1.end(), r1.begin(), r1.end());
  const Subspace s1 = closure(Subspace::span(f, ce.cochain_dim(1), gens), acts1);
  MinimalCalculus mc;
  mc.o1 = restrict_module(a, "O1A", s1, l1, r1);
  EchelonBasis w(f, ce.cochain_dim(2));
  for (std::size_t i = 0; i < s1.dim(); ++i)
    for (std::size_t j = 0; j < s1.dim(); ++j) w.insert(ce.wedge(s1.basis_vector(i), 1, s1.basis_vector(j), 1));
  std::vector<SparseMatrix> acts2 = l2;
  acts2.insert(acts2.end(), r2.begin(), r2.end());
  const Subspace s2 = closure(Subspace::from_echelon(w), acts2);
  mc.o2 = restrict_module(a, "O2A", s2, l2, r2);
  std::vector<Vector> cols0, cols1;
  for (std::size_t i = 0; i < a.dim(); ++i) cols0.push_back(s1.coordinates(gens[i]));
  for (std::size_t j = 0; j < s1.dim(); ++j) cols1.push_back(s2.coordinates(ce.d(s1.basis_vector(j), 1)));
  mc.d0 = Matrix::from_columns(f, s1.dim(), cols0);
  mc.d1 = Matrix::from_columns(f, s2.dim(), cols1);
  return mc;
}

DualityReport ce_duality_check(const CEComplex& ce, const MinimalCalculus& mc) {
  const FiniteAlgebra& a = ce.algebra();
  const std::size_t n = a.dim(), m = ce.derivation_dim(), d1 = mc.o1.module.dim();
  const HomSpace h(mc.o1.module, regular_bimodule(a));
  const Subspace homs = bimodule_maps(h);
  DualityReport rep;
  rep.derivation_dim = m;
  rep.hom_dim = homs.dim();
  // phi_u(w) = w(u)
  std::vector<Matrix> phi_u;
  for (std::size_t l = 0; l < m; ++l) {
    Matrix phi(a.field(), n, d1);
    for (std::size_t j = 0; j < d1; ++j) phi.set_column(j, ce.evaluate(mc.o1.embed(Vector::unit(a.field(), d1, j)), {l}));
    phi_u.push_back(std::move(phi));
  }
  rep.derivation_roundtrip = true;
  for (std::size_t l = 0; l < m; ++l) {
    if (!homs.contains(h.flatten(phi_u[l])) || !(phi_u[l] * mc.d0 == ce.derivation_basis()[l])) {
      rep.derivation_roundtrip = false;
    }
  }
  rep.hom_roundtrip = true;
  for (std::size_t i = 0; i < homs.dim(); ++i) {
    const Matrix phi = h.unflatten(homs.basis_vector(i));
    const Matrix u = phi * mc.d0;
    if (!ce.derivations().contains(u)) {
      rep.hom_roundtrip = false;
      continue;
    }
    const Vector c = ce.derivations().coordinates(u);
    Matrix back(a.field(), n, d1);
    for (std::size_t l = 0; l < m; ++l)
      if (c[l] != 0) back = back + phi_u[l].scaled(c[l]);
    if (!(back == phi)) rep.hom_roundtrip = false;
  }
  return rep;
}

bool ce_center_relations_hold(const CEComplex& ce) {
  if (ce.max_degree() < 2) throw InvalidArgument("center relations need max_degree >= 2");
  const Subspace z = ce.algebra().center();
  for (std::size_t i = 0; i < z.dim(); ++i) {
    const Vector a = z.basis_vector(i);
    const Vector da = ce.da(a);
    for (std::size_t j = 0; j < z.dim(); ++j) {
      const Vector b = z.basis_vector(j);
      const Vector db = ce.da(b);
      if (!(ce.left_act(a, db, 1) == ce.right_act(db, a, 1))) return false;
      if (!(ce.wedge(da, 1, db, 1) == -ce.wedge(db, 1, da, 1))) return false;
    }
  }
  return true;
}

bool ce_d_is_first_order(const CEComplex& ce, std::size_t k) {
  const FiniteAlgebra& a = ce.algebra();
  const EmbeddedModule src = ce.form_module(k);
  const EmbeddedModule dst = ce.form_module(k + 1);
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < src.carrier.dim(); ++j)
    cols.push_back(dst.coordinates(ce.d(src.carrier.basis_vector(j), k)));
  const Matrix dk = Matrix::from_columns(a.field(), dst.carrier.dim(), cols);
  return HomSpace(src.module, dst.module).iterated_delta_vanishes(dk, 1);
}

bool ce_d_is_dv_first_order(const CEComplex& ce, const MinimalCalculus& mc, std::size_t k) {
  if (k > 1) throw InvalidArgument("minimal calculus is built up to degree 2");
  const Bimodule src = k == 0 ? regular_bimodule(ce.algebra()) : mc.o1.module;
  const Bimodule& dst = k == 0 ? mc.o1.module : mc.o2.module;
  const HomSpace h(src, dst);
  return dv_first_order(h).space.contains(h.flatten(k == 0 ? mc.d0 : mc.d1));
}

}  // namespace ncdiff
