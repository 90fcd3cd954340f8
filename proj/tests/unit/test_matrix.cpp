#include <gtest/gtest.h>

#include "ncdiff/errors.hpp"
#include "ncdiff/matrix.hpp"

using namespace ncdiff;

namespace {
const Field Q = Field::rationals();
}

TEST(Vector, Basics) {
  Vector v = Vector::from_ints(Q, {0, 2, -1});
  EXPECT_EQ(v.leading_index(), 1u);
  EXPECT_FALSE(v.is_zero());
  v.add_scaled(mpq_class(-1), v);
  EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(v.leading_index(), 3u);
  EXPECT_EQ(Vector::from_ints(Q, {1, 2}).dot(Vector::from_ints(Q, {3, 4})), 11);
}

TEST(Matrix, ProductAndTranspose) {
  const Matrix a = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, Matrix::from_ints(Q, {{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), Matrix::from_ints(Q, {{1, 3}, {2, 4}}));
  EXPECT_EQ(a * Vector::from_ints(Q, {1, 1}), Vector::from_ints(Q, {3, 7}));
}

TEST(Matrix, FlattenRoundTrip) {
  const Matrix a = Matrix::from_ints(Q, {{1, 2, 3}, {4, 5, 6}});
  const Vector v = a.flatten();
  EXPECT_EQ(v[1 * 3 + 2], 6);
  EXPECT_EQ(Matrix::unflatten(v, 2, 3), a);
}

TEST(Matrix, ShapeMismatchThrows) {
  const Matrix a(Q, 2, 3), b(Q, 2, 3);
  EXPECT_THROW(a * b, DimensionMismatch);
  EXPECT_THROW(a + Matrix(Q, 3, 2), DimensionMismatch);
}

TEST(Matrix, PrimeFieldEntriesNormalized) {
  const Field f = Field::prime(3);
  const Matrix a = Matrix::from_ints(f, {{2, 2}, {0, 2}});
  EXPECT_EQ(a * a, Matrix::from_ints(f, {{1, 2}, {0, 1}}));
}

TEST(SparseMatrix, MatchesDense) {
  const Matrix a = Matrix::from_ints(Q, {{1, 0, 2}, {0, 0, 0}, {-1, 3, 0}});
  const SparseMatrix s(a);
  const Vector v = Vector::from_ints(Q, {1, 2, 3});
  EXPECT_EQ(s.apply(v), a * v);
  EXPECT_EQ((s * s).to_dense(), a * a);
  EXPECT_EQ(s.left_apply(v), a.transpose() * v);
  EXPECT_TRUE((s - s).is_zero());
}
