#include "ncdiff/homspace.hpp"

#include "ncdiff/errors.hpp"

namespace ncdiff {

namespace {

// Phi -> M Phi on the flat space
SparseMatrix left_compose(const Matrix& m, std::size_t rows_q, std::size_t cols_p) {
  SparseMatrix s(m.field(), rows_q * cols_p, rows_q * cols_p);
  for (std::size_t r = 0; r < rows_q; ++r)
    for (std::size_t t = 0; t < rows_q; ++t)
      if (m(r, t) != 0)
        for (std::size_t c = 0; c < cols_p; ++c) s.add(r * cols_p + c, t * cols_p + c, m(r, t));
  s.compress();
  return s;
}

// Phi -> Phi M on the flat space
SparseMatrix right_compose(const Matrix& m, std::size_t rows_q, std::size_t cols_p) {
  SparseMatrix s(m.field(), rows_q * cols_p, rows_q * cols_p);
  for (std::size_t t = 0; t < cols_p; ++t)
    for (std::size_t c = 0; c < cols_p; ++c)
      if (m(t, c) != 0)
        for (std::size_t r = 0; r < rows_q; ++r) s.add(r * cols_p + c, r * cols_p + t, m(t, c));
  s.compress();
  return s;
}

}  // namespace

HomSpace::HomSpace(Bimodule source, Bimodule target) : p_(std::move(source)), q_(std::move(target)) {
  if (!(p_.algebra() == q_.algebra())) throw InvalidArgument("HomSpace: modules over different algebras");
  const std::size_t n = algebra().dim(), mq = q_.dim(), mp = p_.dim();
  for (std::size_t i = 0; i < n; ++i) {
    left_.push_back(left_compose(q_.left(i), mq, mp));
    left_bullet_.push_back(right_compose(p_.left(i), mq, mp));
    right_.push_back(left_compose(q_.right(i), mq, mp));
    right_bullet_.push_back(right_compose(p_.right(i), mq, mp));
    delta_.push_back(left_[i] - left_bullet_[i]);
    bar_delta_.push_back(right_[i] - right_bullet_[i]);
  }
}

Vector HomSpace::flatten(const Matrix& phi) const {
  if (phi.rows() != q_.dim() || phi.cols() != p_.dim()) throw DimensionMismatch("map has the wrong shape");
  return phi.flatten();
}

Matrix HomSpace::unflatten(const Vector& v) const {
  if (v.size() != dim()) throw DimensionMismatch("flat vector has the wrong length");
  return Matrix::unflatten(v, q_.dim(), p_.dim());
}

const SparseMatrix& HomSpace::op(Action kind, std::size_t i) const {
  switch (kind) {
    case Action::left:
      return left_.at(i);
    case Action::left_bullet:
      return left_bullet_.at(i);
    case Action::right:
      return right_.at(i);
    case Action::right_bullet:
      return right_bullet_.at(i);
  }
  throw InvalidArgument("unknown action kind");
}

SparseMatrix HomSpace::op(Action kind, const Vector& a) const {
  if (a.size() != algebra().dim()) throw DimensionMismatch("algebra element has the wrong length");
  SparseMatrix s(field(), dim(), dim());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s = s + op(kind, i).scaled(a[i]);
  return s;
}

void HomSpace::require_graded() const {
  if (!algebra().is_graded() || !p_.is_graded() || !q_.is_graded()) {
    throw InvalidArgument("graded delta needs graded algebra and modules");
  }
  if (field().characteristic() == 2) throw InvalidArgument("graded operations refuse characteristic 2");
}

int HomSpace::entry_parity(std::size_t flat) const {
  const std::size_t r = flat / p_.dim(), c = flat % p_.dim();
  return (q_.parity_of(r) + p_.parity_of(c)) % 2;
}

std::optional<int> HomSpace::parity(const Matrix& phi) const {
  const Vector v = flatten(phi);
  std::optional<int> par;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (par && *par != entry_parity(i)) return std::nullopt;
    par = entry_parity(i);
  }
  return par;
}

const std::vector<SparseMatrix>& HomSpace::graded_deltas() const {
  require_graded();
  if (graded_delta_.empty()) {
    for (std::size_t i = 0; i < algebra().dim(); ++i) {
      const int pa = algebra().parity_of(i);
      SparseMatrix signed_bullet(field(), dim(), dim());
      for (std::size_t r = 0; r < dim(); ++r) {
        for (const auto& [c, v] : left_bullet_[i].row(r)) {
          const bool flip = pa * entry_parity(c) % 2 == 1;
          signed_bullet.add(r, c, flip ? mpq_class(-v) : v);
        }
      }
      signed_bullet.compress();
      graded_delta_.push_back(left_[i] - signed_bullet);
    }
  }
  return graded_delta_;
}

const std::vector<SparseMatrix>& HomSpace::deltas(DeltaFlavor f) const {
  switch (f) {
    case DeltaFlavor::plain:
      return delta_;
    case DeltaFlavor::bar:
      return bar_delta_;
    case DeltaFlavor::graded:
      return graded_deltas();
  }
  throw InvalidArgument("unknown delta flavor");
}

Matrix HomSpace::act(Action kind, const Vector& a, const Matrix& phi) const {
  return unflatten(op(kind, a).apply(flatten(phi)));
}

Matrix HomSpace::delta(const Vector& a, const Matrix& phi) const {
  return act(Action::left, a, phi) - act(Action::left_bullet, a, phi);
}

Matrix HomSpace::bar_delta(const Vector& a, const Matrix& phi) const {
  return act(Action::right, a, phi) - act(Action::right_bullet, a, phi);
}

Matrix HomSpace::graded_delta(const Vector& a, const Matrix& phi) const {
  require_graded();
  const auto pa = algebra().element_parity(a);
  const auto pphi = parity(phi);
  if (!pa || !pphi) {
    if (a.is_zero() || phi.is_zero()) return Matrix(field(), q_.dim(), p_.dim());
    throw InvalidArgument("graded delta needs homogeneous arguments");
  }
  const Matrix bullet = act(Action::left_bullet, a, phi);
  return act(Action::left, a, phi) - (*pa * *pphi % 2 ? bullet.scaled(-1) : bullet);
}

bool HomSpace::iterated_delta_vanishes(const Matrix& phi, std::size_t k, DeltaFlavor flavor) const {
  const auto& ops = deltas(flavor);
  std::vector<Vector> level{flatten(phi)};
  for (std::size_t step = 0; step <= k; ++step) {
    // only the span of each level matters
    EchelonBasis next(field(), dim());
    for (const auto& v : level)
      for (const auto& d : ops) next.insert(d.apply(v));
    if (next.rank() == 0) return true;
    level = next.rows();
  }
  return false;
}

}  // namespace ncdiff
