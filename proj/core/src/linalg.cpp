#include "ncdiff/linalg.hpp"

#include <algorithm>
#include <deque>

#include "ncdiff/errors.hpp"

namespace ncdiff {

// ---------------------------------------------------------- EchelonBasis

void EchelonBasis::reduce(Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const mpq_class c = v[pivots_[i]];
    if (c != 0) v.add_scaled(-c, rows_[i]);
  }
}

bool EchelonBasis::contains(const Vector& v) const {
  Vector w = v;
  reduce(w);
  return w.is_zero();
}

bool EchelonBasis::insert(const Vector& v) {
  Vector w = v;
  reduce(w);
  const std::size_t p = w.leading_index();
  if (p == w.size()) return false;
  w.scale(field_.inverse(w[p]));
  for (auto& row : rows_) {
    const mpq_class c = row[p];
    if (c != 0) row.add_scaled(-c, w);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + offset, std::move(w));
  return true;
}

// ------------------------------------------------------------------ rref

RrefResult rref(const Matrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  Matrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < e.rank(); ++i) out.set_row(i, e.rows()[i]);
  return {std::move(out), e.pivots()};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// -------------------------------------------------------------- Subspace

Subspace Subspace::zero(Field field, std::size_t ambient) {
  return from_echelon(EchelonBasis(field, ambient));
}

Subspace Subspace::full(Field field, std::size_t ambient) {
  EchelonBasis e(field, ambient);
  for (std::size_t i = 0; i < ambient; ++i) e.insert(Vector::unit(field, ambient, i));
  return from_echelon(e);
}

Subspace Subspace::span(Field field, std::size_t ambient, const std::vector<Vector>& vectors) {
  EchelonBasis e(field, ambient);
  for (const auto& v : vectors) e.insert(v);
  return from_echelon(e);
}

Subspace Subspace::row_space(const Matrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return from_echelon(e);
}

Subspace Subspace::from_echelon(const EchelonBasis& basis) {
  Subspace s;
  s.ambient_ = basis.ambient_dim();
  s.basis_ = Matrix::from_rows(basis.field(), basis.ambient_dim(), basis.rows());
  s.pivots_ = basis.pivots();
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector does not live in the ambient space");
  Vector w = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const mpq_class c = w[pivots_[i]];
    if (c != 0) w.add_scaled(-c, basis_.row(i));
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw NotMember("vector is not in the subspace");
  Vector c(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) c.set(i, v[pivots_[i]]);
  return c;
}

Vector Subspace::from_coordinates(const Vector& c) const {
  if (c.size() != dim()) throw DimensionMismatch("coordinate length differs from subspace dimension");
  Vector v(field(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (c[i] != 0) v.add_scaled(c[i], basis_.row(i));
  }
  return v;
}

EchelonBasis Subspace::echelon() const {
  EchelonBasis e(field(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i) e.insert(basis_.row(i));
  return e;
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(field(), ambient_);
  return kernel(basis_);
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!other.contains(basis_.row(i))) return false;
  }
  return true;
}

// ---------------------------------------------------------- kernels etc.

Subspace kernel_of_rows(const EchelonBasis& rows) {
  const std::size_t n = rows.ambient_dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : rows.pivots()) is_pivot[p] = true;
  EchelonBasis out(rows.field(), n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(rows.field(), n);
    v.set(f, 1);
    for (std::size_t i = 0; i < rows.rank(); ++i) {
      const auto& r = rows.rows()[i];
      if (r[f] != 0) v.set(rows.pivots()[i], -r[f]);
    }
    out.insert(v);
  }
  return Subspace::from_echelon(out);
}

Subspace kernel(const Matrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
  return kernel_of_rows(e);
}

Subspace kernel(const SparseMatrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row(m.field(), m.cols());
    for (const auto& [c, v] : m.row(r)) row.add_scaled_at(c, v);
    e.insert(row);
  }
  return kernel_of_rows(e);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("sum of subspaces of different ambient spaces");
  EchelonBasis e = a.echelon();
  for (std::size_t i = 0; i < b.dim(); ++i) e.insert(b.basis_vector(i));
  return Subspace::from_echelon(e);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("intersection of subspaces of different ambient spaces");
  }
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.field(), a.ambient_dim());
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

bool contains(const Subspace& a, const Vector& v) { return a.contains(v); }

std::vector<Vector> quotient_basis(const Subspace& ambient, const Subspace& sub) {
  if (ambient.ambient_dim() != sub.ambient_dim()) throw DimensionMismatch("quotient of unrelated subspaces");
  if (!sub.is_subspace_of(ambient)) throw InvalidArgument("quotient_basis: sub is not contained in ambient");
  EchelonBasis e = sub.echelon();
  std::vector<Vector> reps;
  for (std::size_t i = 0; i < ambient.dim(); ++i) {
    Vector v = ambient.basis_vector(i);
    if (e.insert(v)) reps.push_back(std::move(v));
  }
  return reps;
}

Inclusion compare(const Subspace& a, const Subspace& b) {
  const bool ab = a.is_subspace_of(b);
  const bool ba = b.is_subspace_of(a);
  if (ab && ba) return Inclusion::equal;
  if (ab) return Inclusion::subset;
  if (ba) return Inclusion::superset;
  return Inclusion::incomparable;
}

const char* to_string(Inclusion r) {
  switch (r) {
    case Inclusion::equal:
      return "equal";
    case Inclusion::subset:
      return "subset";
    case Inclusion::superset:
      return "superset";
    case Inclusion::incomparable:
      return "incomparable";
  }
  return "?";
}

AffineSolution solve_affine(std::span<const LinearConstraint> constraints) {
  if (constraints.empty()) throw InvalidArgument("solve_affine needs at least one constraint block");
  const std::size_t n = constraints.front().lhs.cols();
  const Field field = constraints.front().lhs.field();
  EchelonBasis augmented(field, n + 1);
  EchelonBasis homogeneous(field, n);
  for (const auto& c : constraints) {
    if (c.lhs.cols() != n || c.rhs.size() != c.lhs.rows()) {
      throw DimensionMismatch("inconsistent constraint shapes");
    }
    for (std::size_t r = 0; r < c.lhs.rows(); ++r) {
      Vector row(field, n + 1);
      for (std::size_t j = 0; j < n; ++j) row.set(j, c.lhs(r, j));
      row.set(n, c.rhs[r]);
      augmented.insert(row);
      homogeneous.insert(c.lhs.row(r));
    }
  }
  AffineSolution sol;
  sol.homogeneous = kernel_of_rows(homogeneous);
  sol.consistent = augmented.pivots().empty() || augmented.pivots().back() != n;
  sol.particular = Vector(field, n);
  if (sol.consistent) {
    for (std::size_t i = 0; i < augmented.rank(); ++i) {
      sol.particular.set(augmented.pivots()[i], augmented.rows()[i][n]);
    }
  }
  return sol;
}

Subspace image(const SparseMatrix& op, const Subspace& s) {
  if (op.cols() != s.ambient_dim()) throw DimensionMismatch("image: operator does not act on the subspace");
  EchelonBasis e(op.field(), op.rows());
  for (std::size_t i = 0; i < s.dim(); ++i) e.insert(op.apply(s.basis_vector(i)));
  return Subspace::from_echelon(e);
}

Subspace image(const Matrix& op, const Subspace& s) { return image(SparseMatrix(op), s); }

Subspace preimage(std::span<const SparseMatrix> ops, const Subspace& target) {
  if (ops.empty()) throw InvalidArgument("preimage needs at least one operator");
  const std::size_t n = ops.front().cols();
  const Field field = ops.front().field();
  EchelonBasis constraints(field, n);
  if (target.is_full()) return Subspace::full(field, n);
  if (target.is_zero()) {
    for (const auto& op : ops) {
      if (op.cols() != n || op.rows() != target.ambient_dim()) throw DimensionMismatch("preimage shape mismatch");
      for (std::size_t r = 0; r < op.rows(); ++r) {
        Vector row(field, n);
        for (const auto& [c, v] : op.row(r)) row.add_scaled_at(c, v);
        constraints.insert(row);
      }
    }
  } else {
    const Subspace ann = target.annihilator();
    for (const auto& op : ops) {
      if (op.cols() != n || op.rows() != target.ambient_dim()) throw DimensionMismatch("preimage shape mismatch");
      for (std::size_t i = 0; i < ann.dim(); ++i) constraints.insert(op.left_apply(ann.basis_vector(i)));
    }
  }
  return kernel_of_rows(constraints);
}

Subspace closure(const Subspace& start, std::span<const SparseMatrix> generators) {
  EchelonBasis e = start.echelon();
  std::deque<Vector> queue;
  for (std::size_t i = 0; i < start.dim(); ++i) queue.push_back(start.basis_vector(i));
  while (!queue.empty()) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Vector w = g.apply(v);
      if (e.insert(w)) queue.push_back(std::move(w));
    }
  }
  return Subspace::from_echelon(e);
}

Matrix restrict_operator(const SparseMatrix& op, const Subspace& s) {
  if (op.rows() != s.ambient_dim() || op.cols() != s.ambient_dim()) {
    throw DimensionMismatch("restrict_operator: operator does not act on the ambient space");
  }
  std::vector<Vector> cols;
  cols.reserve(s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) cols.push_back(s.coordinates(op.apply(s.basis_vector(j))));
  return Matrix::from_columns(op.field(), s.dim(), cols);
}

Matrix sylvester_rows(const Matrix& m, const Matrix* nx, std::size_t rows, std::size_t cols) {
  const std::size_t k = m.cols();
  Matrix out(m.field(), rows * k, rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      for (std::size_t s = 0; s < cols; ++s)
        if (m(s, c) != 0) out.add_at(r * k + c, r * cols + s, m(s, c));
      if (nx)
        for (std::size_t s = 0; s < rows; ++s)
          if ((*nx)(r, s) != 0) out.add_at(r * k + c, s * cols + c, -(*nx)(r, s));
    }
  }
  return out;
}

}  // namespace ncdiff
