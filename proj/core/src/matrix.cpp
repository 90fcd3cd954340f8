#include "ncdiff/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "ncdiff/errors.hpp"

namespace ncdiff {

namespace {

void require_same(const Field& a, const Field& b) {
  if (!(a == b)) throw FieldMismatch();
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(Field field, std::vector<mpq_class> data) : field_(field), data_(std::move(data)) {
  for (auto& x : data_) field_.normalize(x);
}

Vector Vector::unit(Field field, std::size_t n, std::size_t i) {
  Vector v(field, n);
  v.data_.at(i) = 1;
  return v;
}

Vector Vector::from_ints(Field field, std::initializer_list<long> values) {
  std::vector<mpq_class> d;
  d.reserve(values.size());
  for (long x : values) d.emplace_back(x);
  return Vector(field, std::move(d));
}

void Vector::set(std::size_t i, mpq_class v) {
  field_.normalize(v);
  data_.at(i) = std::move(v);
}

void Vector::add_scaled(const mpq_class& c, const Vector& v) {
  if (v.size() != size()) throw DimensionMismatch("vector lengths differ");
  require_same(field_, v.field_);
  if (c == 0) return;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (v.data_[i] == 0) continue;
    data_[i] += c * v.data_[i];
    field_.normalize(data_[i]);
  }
}

void Vector::scale(const mpq_class& c) {
  for (auto& x : data_) {
    if (x == 0) continue;
    x *= c;
    field_.normalize(x);
  }
}

bool Vector::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return x == 0; });
}

std::size_t Vector::leading_index() const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] != 0) return i;
  }
  return data_.size();
}

Vector Vector::operator+(const Vector& o) const {
  Vector r = *this;
  r.add_scaled(1, o);
  return r;
}

Vector Vector::operator-(const Vector& o) const {
  Vector r = *this;
  r.add_scaled(-1, o);
  return r;
}

Vector Vector::operator-() const { return scaled(-1); }

Vector Vector::scaled(const mpq_class& c) const {
  Vector r = *this;
  r.scale(c);
  return r;
}

mpq_class Vector::dot(const Vector& o) const {
  if (o.size() != size()) throw DimensionMismatch("vector lengths differ");
  mpq_class s = 0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (data_[i] != 0 && o.data_[i] != 0) s += data_[i] * o.data_[i];
  }
  field_.normalize(s);
  return s;
}

std::string Vector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) os << ", ";
    os << data_[i].get_str();
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (long x : row) m.set(i, j++, mpq_class(x));
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, mpq_class v) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  field_.normalize(v);
  data_[r * cols_ + c] = std::move(v);
}

void Matrix::add_at(std::size_t r, std::size_t c, const mpq_class& v) {
  if (r >= rows_ || c >= cols_) throw DimensionMismatch("matrix index out of range");
  auto& x = data_[r * cols_ + c];
  x += v;
  field_.normalize(x);
}

Vector Matrix::row(std::size_t r) const {
  std::vector<mpq_class> d(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                           data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return Vector(field_, std::move(d));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, (*this)(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
  require_same(field_, v.field());
  for (std::size_t c = 0; c < cols_; ++c) data_[r * cols_ + c] = v[c];
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
  require_same(field_, v.field());
  for (std::size_t r = 0; r < rows_; ++r) data_[r * cols_ + c] = v[r];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return x == 0; });
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  require_same(field_, o.field_);
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const mpq_class& b = o.data_[k * o.cols_ + j];
        if (b == 0) continue;
        p.data_[i * o.cols_ + j] += a * b;
      }
    }
  }
  for (auto& x : p.data_) field_.normalize(x);
  return p;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
  require_same(field_, v.field());
  std::vector<mpq_class> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = data_[i * cols_ + k];
      if (a == 0 || v[k] == 0) continue;
      out[i] += a * v[k];
    }
  }
  return Vector(field_, std::move(out));
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  require_same(field_, o.field_);
  Matrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    s.data_[i] += o.data_[i];
    field_.normalize(s.data_[i]);
  }
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const { return scaled(-1); }

Matrix Matrix::scaled(const mpq_class& c) const {
  Matrix s = *this;
  for (auto& x : s.data_) {
    if (x == 0) continue;
    x *= c;
    field_.normalize(x);
  }
  return s;
}

Vector Matrix::flatten() const { return Vector(field_, data_); }

Matrix Matrix::unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionMismatch("cannot unflatten: length mismatch");
  Matrix m(v.field(), rows, cols);
  m.data_ = v.data();
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? " [" : "[[");
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << (r + 1 == rows_ ? "]]" : "]\n");
  }
  if (rows_ == 0) os << "[]";
  return os.str();
}

// ---------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(const Matrix& dense)
    : field_(dense.field()), cols_(dense.cols()), rows_(dense.rows()) {
  for (std::size_t r = 0; r < dense.rows(); ++r) {
    for (std::size_t c = 0; c < dense.cols(); ++c) {
      if (dense(r, c) != 0) rows_[r].emplace_back(static_cast<std::uint32_t>(c), dense(r, c));
    }
  }
}

void SparseMatrix::add(std::size_t r, std::size_t c, const mpq_class& v) {
  if (r >= rows_.size() || c >= cols_) throw DimensionMismatch("sparse index out of range");
  if (v == 0) return;
  auto& row = rows_[r];
  for (auto& e : row) {
    if (e.first == c) {
      e.second += v;
      field_.normalize(e.second);
      return;
    }
  }
  row.emplace_back(static_cast<std::uint32_t>(c), field_.canonical(v));
}

void SparseMatrix::compress() {
  for (auto& row : rows_) {
    std::erase_if(row, [](const Entry& e) { return e.second == 0; });
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  }
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("sparse apply shape mismatch");
  std::vector<mpq_class> out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, val] : rows_[r]) {
      if (v[c] == 0) continue;
      out[r] += val * v[c];
    }
  }
  return Vector(field_, std::move(out));
}

Vector SparseMatrix::left_apply(const Vector& w) const {
  if (w.size() != rows_.size()) throw DimensionMismatch("sparse left_apply shape mismatch");
  std::vector<mpq_class> out(cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (w[r] == 0) continue;
    for (const auto& [c, val] : rows_[r]) out[c] += w[r] * val;
  }
  return Vector(field_, std::move(out));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows()) throw DimensionMismatch("sparse product shape mismatch");
  SparseMatrix p(field_, rows_.size(), o.cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::vector<mpq_class> acc(o.cols_);
    std::vector<bool> touched(o.cols_, false);
    for (const auto& [k, a] : rows_[r]) {
      for (const auto& [c, b] : o.rows_[k]) {
        acc[c] += a * b;
        touched[c] = true;
      }
    }
    for (std::size_t c = 0; c < o.cols_; ++c) {
      if (!touched[c]) continue;
      field_.normalize(acc[c]);
      if (acc[c] != 0) p.rows_[r].emplace_back(static_cast<std::uint32_t>(c), acc[c]);
    }
  }
  return p;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw DimensionMismatch("sparse sum shape mismatch");
  SparseMatrix s = *this;
  for (std::size_t r = 0; r < o.rows_.size(); ++r) {
    for (const auto& [c, v] : o.rows_[r]) s.add(r, c, v);
  }
  s.compress();
  return s;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const { return *this + o.scaled(-1); }

SparseMatrix SparseMatrix::scaled(const mpq_class& c) const {
  SparseMatrix s = *this;
  for (auto& row : s.rows_) {
    for (auto& e : row) {
      e.second *= c;
      field_.normalize(e.second);
    }
  }
  s.compress();
  return s;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(field_, rows_.size(), cols_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, v] : rows_[r]) m.add_at(r, c, v);
  }
  return m;
}

bool SparseMatrix::is_zero() const {
  for (const auto& row : rows_) {
    for (const auto& e : row) {
      if (e.second != 0) return false;
    }
  }
  return true;
}

}  // namespace ncdiff
