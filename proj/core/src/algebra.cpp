#include "ncdiff/algebra.hpp"

#include <bit>
#include <sstream>

#include "ncdiff/errors.hpp"

namespace ncdiff {

FiniteAlgebra::FiniteAlgebra(Field field, std::string name, std::vector<std::string> basis_names,
                             std::vector<mpq_class> table, Vector unit, std::optional<std::vector<int>> parity)
    : field_(field),
      name_(std::move(name)),
      n_(basis_names.size()),
      basis_names_(std::move(basis_names)),
      sc_(std::move(table)),
      unit_(std::move(unit)),
      parity_(std::move(parity)) {
  if (n_ == 0) throw InvalidArgument("algebra must have positive dimension");
  if (sc_.size() != n_ * n_ * n_) throw DimensionMismatch("structure constant table has wrong size");
  if (unit_.size() != n_) throw DimensionMismatch("unit has wrong length");
  if (parity_ && parity_->size() != n_) throw DimensionMismatch("parity has wrong length");
  if (parity_) {
    for (int p : *parity_) {
      if (p != 0 && p != 1) throw InvalidArgument("parity entries must be 0 or 1");
    }
  }
  for (auto& c : sc_) field_.normalize(c);
  left_.assign(n_, Matrix(field_, n_, n_));
  right_.assign(n_, Matrix(field_, n_, n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        const auto& c = sc(i, j, k);
        if (c == 0) continue;
        left_[i].set(k, j, c);
        right_[j].set(k, i, c);
      }
    }
  }
}

std::optional<int> FiniteAlgebra::element_parity(const Vector& a) const {
  std::optional<int> p;
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    if (p && *p != parity_of(i)) return std::nullopt;
    p = parity_of(i);
  }
  return p;
}

Vector FiniteAlgebra::element(std::initializer_list<long> coords) const {
  if (coords.size() != n_) throw DimensionMismatch("element has wrong number of coordinates");
  return Vector::from_ints(field_, coords);
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  if (a.size() != n_ || b.size() != n_) throw DimensionMismatch("multiply: element of another algebra");
  Vector out(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      const mpq_class ab = a[i] * b[j];
      for (std::size_t k = 0; k < n_; ++k) {
        if (sc(i, j, k) != 0) out.add_scaled_at(k, ab * sc(i, j, k));
      }
    }
  }
  return out;
}

Matrix FiniteAlgebra::left_mult(const Vector& a) const {
  Matrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] != 0) m = m + left_[i].scaled(a[i]);
  }
  return m;
}

Matrix FiniteAlgebra::right_mult(const Vector& a) const {
  Matrix m(field_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] != 0) m = m + right_[i].scaled(a[i]);
  }
  return m;
}

ValidationReport FiniteAlgebra::validate() const {
  ValidationReport rep;
  auto fail = [&rep](const std::string& s) { rep.failures.push_back(s); };
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t l = 0; l < n_; ++l) {
          mpq_class lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < n_; ++m) {
            lhs += sc(i, j, m) * sc(m, k, l);
            rhs += sc(j, k, m) * sc(i, m, l);
          }
          if (field_.canonical(lhs - rhs) != 0) {
            std::ostringstream os;
            os << "associativity fails at (i,j,k,l) = (" << i << "," << j << "," << k << "," << l << ")";
            fail(os.str());
          }
        }
      }
    }
  }
  if (unit_.is_zero()) fail("unit is zero");
  for (std::size_t j = 0; j < n_; ++j) {
    const Vector ej = basis(j);
    if (!(multiply(unit_, ej) == ej)) fail("left unit law fails at j = " + std::to_string(j));
    if (!(multiply(ej, unit_) == ej)) fail("right unit law fails at j = " + std::to_string(j));
  }
  if (parity_) {
    if (auto p = element_parity(unit_); p && *p != 0) fail("unit is odd");
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) {
          if (sc(i, j, k) != 0 && parity_of(k) != (parity_of(i) + parity_of(j)) % 2) {
            std::ostringstream os;
            os << "grading violated: e" << i << "*e" << j << " has a component on e" << k;
            fail(os.str());
          }
        }
      }
    }
  }
  return rep;
}

Subspace FiniteAlgebra::center() const {
  std::vector<SparseMatrix> ads;
  for (std::size_t i = 0; i < n_; ++i) ads.emplace_back(left_[i] - right_[i]);
  return preimage(ads, Subspace::zero(field_, n_));
}

bool FiniteAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!(left_[i] == right_[i])) return false;
  }
  return true;
}

bool FiniteAlgebra::is_graded_commutative() const {
  if (!parity_) throw InvalidArgument("graded commutativity needs a parity");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const int s = (parity_of(i) * parity_of(j)) % 2 ? -1 : 1;
      for (std::size_t k = 0; k < n_; ++k) {
        if (field_.canonical(sc(i, j, k) - s * sc(j, i, k)) != 0) return false;
      }
    }
  }
  return true;
}

FiniteAlgebra FiniteAlgebra::opposite() const {
  std::vector<mpq_class> op(sc_.size());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) op[(i * n_ + j) * n_ + k] = sc(j, i, k);
  return FiniteAlgebra(field_, name_ + "^op", basis_names_, std::move(op), unit_, parity_);
}

FiniteAlgebra FiniteAlgebra::with_name(std::string name) const {
  FiniteAlgebra a = *this;
  a.name_ = std::move(name);
  return a;
}

namespace catalog {

namespace {

struct Table {
  std::size_t n;
  std::vector<mpq_class> sc;
  explicit Table(std::size_t n) : n(n), sc(n * n * n) {}
  void set(std::size_t i, std::size_t j, std::size_t k, long v) { sc[(i * n + j) * n + k] = v; }
};

}  // namespace

FiniteAlgebra scalar(Field field) {
  Table t(1);
  t.set(0, 0, 0, 1);
  return FiniteAlgebra(field, "scalar", {"1"}, t.sc, Vector::unit(field, 1, 0));
}

FiniteAlgebra trunc_poly(std::size_t n, Field field) {
  if (n == 0) throw InvalidArgument("trunc_poly needs n >= 1");
  Table t(n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
    for (std::size_t j = 0; i + j < n; ++j) t.set(i, j, i + j, 1);
  }
  return FiniteAlgebra(field, "trunc_poly(" + std::to_string(n) + ")", names, t.sc, Vector::unit(field, n, 0));
}

FiniteAlgebra trunc_xy(Field field) {
  Table t(3);
  t.set(0, 0, 0, 1);
  t.set(0, 1, 1, 1);
  t.set(1, 0, 1, 1);
  t.set(0, 2, 2, 1);
  t.set(2, 0, 2, 1);
  return FiniteAlgebra(field, "trunc_xy", {"1", "x", "y"}, t.sc, Vector::unit(field, 3, 0));
}

FiniteAlgebra matrix(std::size_t k, Field field) {
  if (k == 0) throw InvalidArgument("matrix needs k >= 1");
  const std::size_t n = k * k;
  Table t(n);
  std::vector<std::string> names;
  Vector unit(field, n);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      names.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
      for (std::size_t d = 0; d < k; ++d) t.set(a * k + b, b * k + d, a * k + d, 1);
    }
    unit.set(a * k + a, 1);
  }
  return FiniteAlgebra(field, "matrix(" + std::to_string(k) + ")", names, t.sc, unit);
}

FiniteAlgebra upper_triangular(std::size_t k, Field field) {
  if (k == 0) throw InvalidArgument("upper_triangular needs k >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) units.emplace_back(a, b);
  const std::size_t n = units.size();
  auto index = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i)
      if (units[i] == std::pair{a, b}) return i;
    return n;
  };
  Table t(n);
  std::vector<std::string> names;
  Vector unit(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [a, b] = units[i];
    names.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
    if (a == b) unit.set(i, 1);
    for (std::size_t j = 0; j < n; ++j) {
      auto [c, d] = units[j];
      if (b == c) t.set(i, j, index(a, d), 1);
    }
  }
  return FiniteAlgebra(field, "upper_triangular(" + std::to_string(k) + ")", names, t.sc, unit);
}

FiniteAlgebra quaternions(Field field) {
  // i*j = k, j*k = i, k*i = j
  Table t(4);
  for (std::size_t a = 0; a < 4; ++a) {
    t.set(0, a, a, 1);
    t.set(a, 0, a, 1);
  }
  for (std::size_t a = 1; a < 4; ++a) t.set(a, a, 0, -1);
  t.set(1, 2, 3, 1);
  t.set(2, 1, 3, -1);
  t.set(2, 3, 1, 1);
  t.set(3, 2, 1, -1);
  t.set(3, 1, 2, 1);
  t.set(1, 3, 2, -1);
  return FiniteAlgebra(field, "quaternions", {"1", "i", "j", "k"}, t.sc, Vector::unit(field, 4, 0));
}

FiniteAlgebra grassmann(std::size_t g, Field field) {
  if (g > 6) throw InvalidArgument("grassmann supports at most 6 generators");
  const std::size_t n = std::size_t{1} << g;
  Table t(n);
  std::vector<std::string> names;
  std::vector<int> parity;
  for (std::size_t s = 0; s < n; ++s) {
    std::string name;
    for (std::size_t b = 0; b < g; ++b)
      if (s >> b & 1) name += "t" + std::to_string(b + 1);
    names.push_back(name.empty() ? "1" : name);
    parity.push_back(std::popcount(s) % 2);
    for (std::size_t u = 0; u < n; ++u) {
      if (s & u) continue;
      // sign of moving each generator of u past the larger generators of s
      int inversions = 0;
      for (std::size_t b = 0; b < g; ++b)
        if (u >> b & 1) inversions += std::popcount(s >> (b + 1));
      t.set(s, u, s | u, inversions % 2 ? -1 : 1);
    }
  }
  return FiniteAlgebra(field, "grassmann(" + std::to_string(g) + ")", names, t.sc, Vector::unit(field, n, 0), parity);
}

FiniteAlgebra group_algebra(std::size_t m, Field field) {
  if (m == 0) throw InvalidArgument("group_algebra needs m >= 1");
  Table t(m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("g^" + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) t.set(i, j, (i + j) % m, 1);
  }
  return FiniteAlgebra(field, "group_algebra(" + std::to_string(m) + ")", names, t.sc, Vector::unit(field, m, 0));
}

FiniteAlgebra product(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<mpq_class> sc(n * n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j)
      for (std::size_t k = 0; k < na; ++k) sc[(i * n + j) * n + k] = a.sc(i, j, k);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < nb; ++k) sc[((na + i) * n + na + j) * n + na + k] = b.sc(i, j, k);
  std::vector<std::string> names;
  for (const auto& s : a.basis_names()) names.push_back("(" + s + ",0)");
  for (const auto& s : b.basis_names()) names.push_back("(0," + s + ")");
  Vector unit(a.field(), n);
  for (std::size_t i = 0; i < na; ++i) unit.set(i, a.unit()[i]);
  for (std::size_t i = 0; i < nb; ++i) unit.set(na + i, b.unit()[i]);
  std::optional<std::vector<int>> parity;
  if (a.is_graded() || b.is_graded()) {
    parity.emplace();
    for (std::size_t i = 0; i < na; ++i) parity->push_back(a.parity_of(i));
    for (std::size_t i = 0; i < nb; ++i) parity->push_back(b.parity_of(i));
  }
  return FiniteAlgebra(a.field(), a.name() + "x" + b.name(), names, std::move(sc), unit, parity);
}

FiniteAlgebra by_name(const std::string& name, long param, Field field) {
  auto size = [&](long lo) {
    if (param < lo) throw InvalidArgument(name + " parameter must be at least " + std::to_string(lo));
    return static_cast<std::size_t>(param);
  };
  if (name == "scalar") return scalar(field);
  if (name == "trunc_poly") return trunc_poly(size(1), field);
  if (name == "trunc_xy") return trunc_xy(field);
  if (name == "matrix") return matrix(size(1), field);
  if (name == "upper_triangular") return upper_triangular(size(1), field);
  if (name == "quaternions") return quaternions(field);
  if (name == "grassmann") return grassmann(size(0), field);
  if (name == "group_algebra") return group_algebra(size(1), field);
  throw InvalidArgument("unknown catalog algebra '" + name + "'");
}

std::vector<std::string> names() {
  return {"scalar", "trunc_poly", "trunc_xy", "matrix", "upper_triangular", "quaternions", "grassmann", "group_algebra"};
}

}  // namespace catalog

}  // namespace ncdiff
