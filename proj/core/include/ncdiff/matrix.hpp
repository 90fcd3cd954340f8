#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ncdiff/field.hpp"

namespace ncdiff {

/// Dense coordinate vector over a Field.
class Vector {
 public:
  Vector() = default;
  Vector(Field field, std::size_t n) : field_(field), data_(n) {}
  Vector(Field field, std::vector<mpq_class> data);
  static Vector unit(Field field, std::size_t n, std::size_t i);
  static Vector from_ints(Field field, std::initializer_list<long> values);

  const Field& field() const { return field_; }
  std::size_t size() const { return data_.size(); }
  const mpq_class& operator[](std::size_t i) const { return data_[i]; }
  /// Writes a canonicalized value.
  void set(std::size_t i, mpq_class v);
  /// this[i] += c * v[i] for all i.
  void add_scaled(const mpq_class& c, const Vector& v);
  void add_scaled_at(std::size_t i, const mpq_class& c) {
    data_[i] += c;
    field_.normalize(data_[i]);
  }
  void scale(const mpq_class& c);

  bool is_zero() const;
  /// Index of the first nonzero entry, or size() if none.
  std::size_t leading_index() const;
  const std::vector<mpq_class>& data() const { return data_; }

  Vector operator+(const Vector& o) const;
  Vector operator-(const Vector& o) const;
  Vector operator-() const;
  Vector scaled(const mpq_class& c) const;
  mpq_class dot(const Vector& o) const;

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.field_ == b.field_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<mpq_class> data_;
};

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(Field field, std::size_t n);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);
  /// Rows of the result are the given vectors (all of length cols).
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  /// Columns of the result are the given vectors (all of length rows).
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar at(std::size_t r, std::size_t c) const { return Scalar(field_, (*this)(r, c)); }
  void set(std::size_t r, std::size_t c, mpq_class v);
  void add_at(std::size_t r, std::size_t c, const mpq_class& v);

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const mpq_class& c) const;

  /// Row-major flattening: entry (r, c) lands at index r * cols + c.
  Vector flatten() const;
  static Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Row-compressed sparse matrix; used for the structured action operators
/// on tensor products and Hom-spaces.
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, mpq_class>;

  SparseMatrix() = default;
  SparseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), cols_(cols), rows_(rows) {}
  explicit SparseMatrix(const Matrix& dense);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Accumulates v into entry (r, c).
  void add(std::size_t r, std::size_t c, const mpq_class& v);
  /// Drops explicit zeros and sorts each row by column.
  void compress();

  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  Vector apply(const Vector& v) const;
  /// Returns w^T * this as a vector of length cols().
  Vector left_apply(const Vector& w) const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix scaled(const mpq_class& c) const;
  Matrix to_dense() const;
  bool is_zero() const;

 private:
  Field field_;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace ncdiff
