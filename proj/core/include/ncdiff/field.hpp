#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ncdiff {

/// Ground field descriptor: the rationals (characteristic 0) or a prime
/// field F_p. Field elements are stored as mpq_class; over F_p the stored
/// value is always an integer in [0, p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws InvalidArgument if p is not prime.
  static Field prime(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// Brings x into canonical form. Any rational with denominator prime to
  /// p is accepted over F_p.
  void normalize(mpq_class& x) const;
  mpq_class canonical(mpq_class x) const {
    normalize(x);
    return x;
  }
  mpq_class inverse(const mpq_class& x) const;
  mpq_class from_int(long v) const { return canonical(mpq_class(v)); }

  /// Parses "p/q" or "p" (optionally signed).
  mpq_class parse(std::string_view text) const;
  std::string format(const mpq_class& x) const;
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// A field element tagged with its field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, mpq_class value) : field_(field), value_(std::move(value)) {
    field_.normalize(value_);
  }
  Scalar(Field field, long value) : Scalar(field, mpq_class(value)) {}

  const Field& field() const { return field_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  /// Throws DivisionByZero.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

  std::string to_string() const { return field_.format(value_); }

 private:
  void check(const Scalar& o) const;
  Field field_;
  mpq_class value_;
};

}  // namespace ncdiff
