#pragma once

// Brute-force constructions written directly from the definitions, using
// only structure constants and plain kernels.

#include <vector>

#include "ncdiff/bimodule.hpp"
#include "ncdiff/linalg.hpp"

namespace brute {

using namespace ncdiff;

// Rows of X -> A X - X B for unknown X of shape a.rows() x b.cols().
inline void commutator_rows(const Matrix& a, const Matrix& b, std::vector<Vector>& out) {
  const std::size_t r = a.rows(), c = b.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      Vector row(a.field(), r * c);
      for (std::size_t k = 0; k < a.cols(); ++k) row.add_scaled_at(k * c + j, a(i, k));
      for (std::size_t k = 0; k < b.rows(); ++k) row.add_scaled_at(i * c + k, -b(k, j));
      out.push_back(row);
    }
}

inline Subspace solve(const Field& f, std::size_t unknowns, const std::vector<Vector>& rows) {
  if (rows.empty()) return Subspace::full(f, unknowns);
  return kernel(Matrix::from_rows(f, unknowns, rows));
}

// delta_a on Hom(P, Q) as a dense operator on flat coordinates r * dimP + c.
inline Matrix delta_dense(const Bimodule& p, const Bimodule& q, std::size_t i) {
  const std::size_t m = q.dim(), n = p.dim();
  Matrix d(p.field(), m * n, m * n);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      // image of the elementary map E_rc
      for (std::size_t r2 = 0; r2 < m; ++r2) d.add_at(r2 * n + c, r * n + c, q.left(i)(r2, r));
      for (std::size_t c2 = 0; c2 < n; ++c2) d.add_at(r * n + c2, r * n + c, -p.left(i)(c, c2));
    }
  return d;
}

inline Subspace brute_grothendieck(const Bimodule& p, const Bimodule& q, std::size_t k) {
  const std::size_t dim = p.dim() * q.dim();
  std::vector<Matrix> ds;
  for (std::size_t i = 0; i < p.algebra().dim(); ++i) ds.push_back(delta_dense(p, q, i));
  std::vector<Matrix> words = ds;
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Matrix> next;
    for (const auto& w : words)
      for (const auto& d : ds) next.push_back(d * w);
    words = std::move(next);
  }
  std::vector<Vector> rows;
  for (const auto& w : words)
    for (std::size_t r = 0; r < w.rows(); ++r) rows.push_back(w.row(r));
  return solve(p.field(), dim, rows);
}

// Derivations u: A -> A of parity par (ungraded when graded = false).
inline Subspace brute_derivations(const FiniteAlgebra& a, bool graded, int par) {
  const std::size_t n = a.dim();
  const Field& f = a.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class sign = (graded && par == 1 && a.parity_of(i) == 1) ? -1 : 1;
      for (std::size_t t = 0; t < n; ++t) {
        Vector row(f, n * n);
        for (std::size_t k = 0; k < n; ++k) row.add_scaled_at(t * n + k, a.sc(i, j, k));
        for (std::size_t r = 0; r < n; ++r) row.add_scaled_at(r * n + i, -a.sc(r, j, t));
        for (std::size_t r = 0; r < n; ++r) row.add_scaled_at(r * n + j, -sign * a.sc(i, r, t));
        rows.push_back(row);
      }
    }
  if (graded)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if ((a.parity_of(r) + a.parity_of(c) + par) % 2 != 0) rows.push_back(Vector::unit(f, n * n, r * n + c));
  return solve(f, n * n, rows);
}

// Bimodule maps P -> Q.
inline Subspace brute_bimodule_maps(const Bimodule& p, const Bimodule& q) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < p.algebra().dim(); ++i) {
    commutator_rows(q.left(i), p.left(i), rows);
    commutator_rows(q.right(i), p.right(i), rows);
  }
  return solve(p.field(), p.dim() * q.dim(), rows);
}

inline std::vector<FiniteAlgebra> ungraded() {
  return {catalog::scalar(), catalog::trunc_poly(3), catalog::trunc_xy(), catalog::matrix(2),
          catalog::upper_triangular(2), catalog::quaternions(), catalog::group_algebra(3),
          catalog::trunc_poly(3, Field::prime(5))};
}

// Tensor helpers in A (x) A (index p*n + q) and A (x) A (x) A.
inline Vector mult_right2(const FiniteAlgebra& a, const Vector& w, std::size_t e) {
  const std::size_t n = a.dim();
  Vector out(a.field(), n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (w[p * n + q] != 0)
        for (std::size_t t = 0; t < n; ++t) out.add_scaled_at(p * n + t, w[p * n + q] * a.sc(q, e, t));
  return out;
}

inline Vector mult_left2(const FiniteAlgebra& a, std::size_t e, const Vector& w) {
  const std::size_t n = a.dim();
  Vector out(a.field(), n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (w[p * n + q] != 0)
        for (std::size_t t = 0; t < n; ++t) out.add_scaled_at(t * n + q, w[p * n + q] * a.sc(e, p, t));
  return out;
}

// (x (x) y)(z (x) w) = x (x) yz (x) w
inline Vector juxtapose(const FiniteAlgebra& a, const Vector& u, const Vector& v) {
  const std::size_t n = a.dim();
  Vector out(a.field(), n * n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (u[x * n + y] == 0) continue;
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w) {
          if (v[z * n + w] == 0) continue;
          for (std::size_t t = 0; t < n; ++t)
            out.add_scaled_at((x * n + t) * n + w, u[x * n + y] * v[z * n + w] * a.sc(y, z, t));
        }
    }
  return out;
}

// m: A (x) A -> A
inline Matrix multiplication(const FiniteAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), n, n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t t = 0; t < n; ++t) m.add_at(t, p * n + q, a.sc(p, q, t));
  return m;
}

// 1 (x) e - e (x) 1
inline Vector universal_d(const FiniteAlgebra& a, const Vector& e) {
  const std::size_t n = a.dim();
  Vector out(a.field(), n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const mpq_class c = a.unit()[p] * e[q] - e[p] * a.unit()[q];
      if (c != 0) out.add_scaled_at(p * n + q, c);
    }
  return out;
}

}  // namespace brute
