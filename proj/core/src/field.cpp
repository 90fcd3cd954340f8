#include "ncdiff/field.hpp"

#include "ncdiff/errors.hpp"

namespace ncdiff {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  return Field(p);
}

void Field::normalize(mpq_class& x) const {
  if (p_ == 0) return;
  mpz_class modulus(static_cast<unsigned long>(p_));
  mpz_class num = x.get_num();
  if (x.get_den() != 1) {
    mpz_class den = x.get_den();
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) throw DivisionByZero();
    num *= inv;
  }
  mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
  x = mpq_class(num);
}

mpq_class Field::inverse(const mpq_class& x) const {
  if (x == 0) throw DivisionByZero();
  if (p_ == 0) return 1 / x;
  mpz_class modulus(static_cast<unsigned long>(p_));
  mpz_class inv;
  mpz_class num = x.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), modulus.get_mpz_t());
  return mpq_class(inv);
}

mpq_class Field::parse(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw SpecError("empty scalar literal");
  mpq_class v;
  try {
    v = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw SpecError("malformed scalar literal '" + s + "'");
  }
  if (v.get_den() == 0) throw SpecError("zero denominator in '" + s + "'");
  v.canonicalize();
  normalize(v);
  return v;
}

std::string Field::format(const mpq_class& x) const { return x.get_str(); }

std::string Field::name() const { return p_ == 0 ? std::string("q") : "p:" + std::to_string(p_); }

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  return Scalar(field_, value_ + o.value_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  return Scalar(field_, value_ - o.value_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  return Scalar(field_, value_ * o.value_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check(o);
  return Scalar(field_, value_ * field_.inverse(o.value_));
}

Scalar Scalar::operator-() const { return Scalar(field_, -value_); }

}  // namespace ncdiff
