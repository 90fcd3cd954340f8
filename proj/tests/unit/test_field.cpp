#include <gtest/gtest.h>

#include "ncdiff/errors.hpp"
#include "ncdiff/field.hpp"

using namespace ncdiff;

TEST(Field, RationalParseAndFormat) {
  const Field q = Field::rationals();
  EXPECT_EQ(q.format(q.parse("6/4")), "3/2");
  EXPECT_EQ(q.format(q.parse("-7")), "-7");
  EXPECT_EQ(q.name(), "q");
  EXPECT_THROW(q.parse("1/0"), Error);
  EXPECT_THROW(q.parse("abc"), Error);
}

TEST(Field, PrimeCanonicalForm) {
  const Field f = Field::prime(5);
  EXPECT_EQ(f.from_int(-1), 4);
  EXPECT_EQ(f.parse("1/2"), 3);  // 2 * 3 = 6 = 1
  EXPECT_EQ(f.inverse(mpq_class(2)), 3);
  EXPECT_EQ(f.name(), "p:5");
  EXPECT_THROW(f.parse("1/5"), Error);
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field::prime(4), InvalidArgument);
  EXPECT_THROW(Field::prime(1), InvalidArgument);
  EXPECT_NO_THROW(Field::prime(2));
}

TEST(Scalar, Arithmetic) {
  const Field f = Field::prime(7);
  const Scalar a(f, 3), b(f, 5);
  EXPECT_EQ((a + b).value(), 1);
  EXPECT_EQ((a * b).value(), 1);
  EXPECT_EQ((a / b * b), a);
  EXPECT_EQ((-a).value(), 4);
  EXPECT_THROW(a / Scalar(f, 0), DivisionByZero);
}

TEST(Scalar, FieldMismatch) {
  EXPECT_THROW(Scalar(Field::prime(3), 1) + Scalar(Field::rationals(), 1), FieldMismatch);
}
