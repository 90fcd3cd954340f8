#include "ncdiff/bimodule.hpp"

#include <sstream>

#include "ncdiff/errors.hpp"
#include "ncdiff/homspace.hpp"

namespace ncdiff {

Bimodule::Bimodule(FiniteAlgebra algebra, std::string name, std::size_t dim, std::vector<Matrix> left,
                   std::vector<Matrix> right, std::optional<std::vector<int>> parity)
    : algebra_(std::move(algebra)),
      name_(std::move(name)),
      dim_(dim),
      left_(std::move(left)),
      right_(std::move(right)),
      parity_(std::move(parity)) {
  const std::size_t n = algebra_.dim();
  if (left_.size() != n || right_.size() != n) throw DimensionMismatch("one action matrix per basis element expected");
  for (std::size_t i = 0; i < n; ++i) {
    if (left_[i].rows() != dim_ || left_[i].cols() != dim_ || right_[i].rows() != dim_ || right_[i].cols() != dim_) {
      throw DimensionMismatch("action matrix has wrong shape");
    }
  }
  if (parity_ && parity_->size() != dim_) throw DimensionMismatch("module parity has wrong length");
}

Matrix Bimodule::left_of(const Vector& a) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t i = 0; i < algebra_.dim(); ++i)
    if (a[i] != 0) m = m + left_[i].scaled(a[i]);
  return m;
}

Matrix Bimodule::right_of(const Vector& a) const {
  Matrix m(field(), dim_, dim_);
  for (std::size_t i = 0; i < algebra_.dim(); ++i)
    if (a[i] != 0) m = m + right_[i].scaled(a[i]);
  return m;
}

Vector Bimodule::act(const Vector& a, const Vector& p, const Vector& b) const { return left_of(a) * (right_of(b) * p); }

ValidationReport Bimodule::validate(bool central) const {
  ValidationReport rep;
  const std::size_t n = algebra_.dim();
  const Matrix id = Matrix::identity(field(), dim_);
  if (!(left_of(algebra_.unit()) == id)) rep.failures.push_back("unit does not act as identity on the left");
  if (!(right_of(algebra_.unit()) == id)) rep.failures.push_back("unit does not act as identity on the right");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector eij = algebra_.multiply(algebra_.basis(i), algebra_.basis(j));
      std::ostringstream at;
      at << " at (" << i << "," << j << ")";
      if (!(left_[i] * left_[j] == left_of(eij))) rep.failures.push_back("left action is not multiplicative" + at.str());
      if (!(right_[j] * right_[i] == right_of(eij))) {
        rep.failures.push_back("right action is not multiplicative" + at.str());
      }
      if (!(left_[i] * right_[j] == right_[j] * left_[i])) rep.failures.push_back("actions do not commute" + at.str());
    }
  }
  if (parity_ && algebra_.is_graded()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
          const int want = (algebra_.parity_of(i) + parity_of(c)) % 2;
          if ((left_[i](r, c) != 0 || right_[i](r, c) != 0) && parity_of(r) != want) {
            rep.failures.push_back("action of e" + std::to_string(i) + " does not respect the grading");
            r = dim_;
            break;
          }
        }
      }
    }
  }
  if (central && !is_central()) rep.failures.push_back("left and right actions differ on the center");
  return rep;
}

bool Bimodule::is_central() const {
  const Subspace z = algebra_.center();
  for (std::size_t i = 0; i < z.dim(); ++i) {
    const Vector v = z.basis_vector(i);
    if (!(left_of(v) == right_of(v))) return false;
  }
  return true;
}

Bimodule Bimodule::with_name(std::string name) const {
  Bimodule b = *this;
  b.name_ = std::move(name);
  return b;
}

Bimodule regular_bimodule(const FiniteAlgebra& a) {
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    left.push_back(a.left_mult(i));
    right.push_back(a.right_mult(i));
  }
  return Bimodule(a, "regular", a.dim(), std::move(left), std::move(right), a.parity());
}

namespace {

Matrix block_diag(const Matrix& x, const Matrix& y) {
  Matrix m(x.field(), x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) m.set(r, c, x(r, c));
  for (std::size_t r = 0; r < y.rows(); ++r)
    for (std::size_t c = 0; c < y.cols(); ++c) m.set(x.rows() + r, x.cols() + c, y(r, c));
  return m;
}

std::optional<std::vector<int>> concat_parity(const Bimodule& p, const Bimodule& q) {
  if (!p.is_graded() && !q.is_graded()) return std::nullopt;
  std::vector<int> out;
  for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(p.parity_of(i));
  for (std::size_t i = 0; i < q.dim(); ++i) out.push_back(q.parity_of(i));
  return out;
}

}  // namespace

Bimodule direct_sum(const Bimodule& p, const Bimodule& q) {
  if (!(p.algebra() == q.algebra())) throw InvalidArgument("direct_sum: modules over different algebras");
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < p.algebra().dim(); ++i) {
    left.push_back(block_diag(p.left(i), q.left(i)));
    right.push_back(block_diag(p.right(i), q.right(i)));
  }
  return Bimodule(p.algebra(), p.name() + "+" + q.name(), p.dim() + q.dim(), std::move(left), std::move(right),
                  concat_parity(p, q));
}

Bimodule zero_module(const FiniteAlgebra& a) {
  std::vector<Matrix> acts(a.dim(), Matrix(a.field(), 0, 0));
  return Bimodule(a, "zero", 0, acts, acts);
}

Bimodule character_bimodule(const FiniteAlgebra& a, const Vector& chi_left, const Vector& chi_right) {
  const std::size_t n = a.dim();
  if (chi_left.size() != n || chi_right.size() != n) throw DimensionMismatch("character length must equal dim");
  for (const Vector* chi : {&chi_left, &chi_right}) {
    if (chi->dot(a.unit()) != 1) throw InvalidArgument("character is not unital");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (chi->dot(a.multiply(a.basis(i), a.basis(j))) != (*chi)[i] * (*chi)[j])
          throw InvalidArgument("character is not multiplicative");
  }
  std::vector<Matrix> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(Matrix(a.field(), 1, 1));
    left.back().set(0, 0, chi_left[i]);
    right.push_back(Matrix(a.field(), 1, 1));
    right.back().set(0, 0, chi_right[i]);
  }
  return Bimodule(a, "char(" + chi_left.to_string() + "," + chi_right.to_string() + ")", 1, left, right);
}

Bimodule free_module(const FiniteAlgebra& a, std::size_t rank) {
  if (rank == 0) return zero_module(a);
  Bimodule out = regular_bimodule(a);
  for (std::size_t j = 1; j < rank; ++j) out = direct_sum(out, regular_bimodule(a));
  return out.with_name("free(" + std::to_string(rank) + ")");
}

Bimodule opposite(const Bimodule& p) {
  return Bimodule(p.algebra().opposite(), p.name() + "^op", p.dim(), p.right_actions(), p.left_actions(), p.parity());
}

Matrix TensorModule::delta(std::size_t b) const { return outer.left(b) - inner_left[b]; }

Matrix TensorModule::bar_delta(std::size_t b) const {
  if (!two_sided) throw InvalidArgument("bar delta needs the two-sided tensor module");
  return outer.right(b) - inner_right[b];
}

TensorModule tensor_A_P(const Bimodule& p) {
  const FiniteAlgebra& a = p.algebra();
  const std::size_t n = a.dim(), m = p.dim(), dim = n * m;
  TensorModule t;
  t.module_dim = m;
  std::vector<Matrix> left(n, Matrix(a.field(), dim, dim)), right = left, inner = left;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t q = 0; q < m; ++q) {
        const std::size_t col = x * m + q;
        for (std::size_t y = 0; y < n; ++y) {
          if (a.left_mult(b)(y, x) != 0) left[b].add_at(y * m + q, col, a.left_mult(b)(y, x));
        }
        for (std::size_t r = 0; r < m; ++r) {
          if (p.right(b)(r, q) != 0) right[b].add_at(x * m + r, col, p.right(b)(r, q));
          if (p.left(b)(r, q) != 0) inner[b].add_at(x * m + r, col, p.left(b)(r, q));
        }
      }
    }
  }
  t.outer = Bimodule(a, "A(x)" + p.name(), dim, std::move(left), std::move(right));
  t.inner_left = std::move(inner);
  return t;
}

TensorModule tensor_A_P_A(const Bimodule& p) {
  const FiniteAlgebra& a = p.algebra();
  const std::size_t n = a.dim(), m = p.dim(), dim = n * m * n;
  TensorModule t;
  t.module_dim = m;
  t.two_sided = true;
  std::vector<Matrix> left(n, Matrix(a.field(), dim, dim)), right = left, inl = left, inr = left;
  auto idx = [&](std::size_t x, std::size_t q, std::size_t c) { return (x * m + q) * n + c; };
  for (std::size_t b = 0; b < n; ++b) {
    const Matrix& lb = a.left_mult(b);
    const Matrix& rb = a.right_mult(b);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t q = 0; q < m; ++q) {
        for (std::size_t c = 0; c < n; ++c) {
          const std::size_t col = idx(x, q, c);
          for (std::size_t y = 0; y < n; ++y) {
            if (lb(y, x) != 0) left[b].add_at(idx(y, q, c), col, lb(y, x));
            if (rb(y, c) != 0) right[b].add_at(idx(x, q, y), col, rb(y, c));
          }
          for (std::size_t r = 0; r < m; ++r) {
            if (p.left(b)(r, q) != 0) inl[b].add_at(idx(x, r, c), col, p.left(b)(r, q));
            if (p.right(b)(r, q) != 0) inr[b].add_at(idx(x, r, c), col, p.right(b)(r, q));
          }
        }
      }
    }
  }
  t.outer = Bimodule(a, "A(x)" + p.name() + "(x)A", dim, std::move(left), std::move(right));
  t.inner_left = std::move(inl);
  t.inner_right = std::move(inr);
  return t;
}

EmbeddedModule restrict_module(const FiniteAlgebra& a, std::string name, const Subspace& s,
                               const std::vector<SparseMatrix>& left, const std::vector<SparseMatrix>& right,
                               std::optional<std::vector<int>> ambient_parity) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(restrict_operator(left[i], s));
    r.push_back(restrict_operator(right[i], s));
  }
  std::optional<std::vector<int>> parity;
  if (ambient_parity) {
    // only meaningful when the canonical basis is homogeneous
    std::vector<int> pv;
    bool homogeneous = true;
    for (std::size_t i = 0; i < s.dim() && homogeneous; ++i) {
      const Vector v = s.basis_vector(i);
      int par = -1;
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        if (par >= 0 && par != (*ambient_parity)[c]) homogeneous = false;
        par = (*ambient_parity)[c];
      }
      pv.push_back(par < 0 ? 0 : par);
    }
    if (homogeneous) parity = std::move(pv);
  }
  return {Bimodule(a, std::move(name), s.dim(), std::move(l), std::move(r), std::move(parity)), s};
}

EmbeddedModule right_dual(const Bimodule& q) {
  const FiniteAlgebra& a = q.algebra();
  const HomSpace h(q, regular_bimodule(a));
  // right-linear: u(qb) = u(q)b for all b, i.e. bar delta_b u = 0
  const Subspace s = preimage(h.bar_deltas(), Subspace::zero(a.field(), h.dim()));
  return restrict_module(a, "right_dual(" + q.name() + ")", s, h.lefts(), h.left_bullets());
}

EmbeddedModule left_dual(const Bimodule& q) {
  const FiniteAlgebra& a = q.algebra();
  const HomSpace h(q, regular_bimodule(a));
  const Subspace s = preimage(h.deltas(), Subspace::zero(a.field(), h.dim()));
  return restrict_module(a, "left_dual(" + q.name() + ")", s, h.right_bullets(), h.rights());
}

}  // namespace ncdiff
