#include <gtest/gtest.h>

#include "ncdiff/algebra.hpp"
#include "ncdiff/errors.hpp"

using namespace ncdiff;

TEST(Catalog, AllEntriesValidate) {
  for (const auto& name : catalog::names()) {
    const long param = name == "grassmann" ? 2 : name == "trunc_poly" || name == "group_algebra" ? 3 : 2;
    const FiniteAlgebra a = catalog::by_name(name, param);
    EXPECT_TRUE(a.validate().ok()) << name;
  }
  EXPECT_THROW(catalog::by_name("octonions", 0), InvalidArgument);
}

TEST(Catalog, Dimensions) {
  EXPECT_EQ(catalog::scalar().dim(), 1u);
  EXPECT_EQ(catalog::trunc_poly(4).dim(), 4u);
  EXPECT_EQ(catalog::trunc_xy().dim(), 3u);
  EXPECT_EQ(catalog::matrix(2).dim(), 4u);
  EXPECT_EQ(catalog::upper_triangular(2).dim(), 3u);
  EXPECT_EQ(catalog::quaternions().dim(), 4u);
  EXPECT_EQ(catalog::grassmann(2).dim(), 4u);
  EXPECT_EQ(catalog::group_algebra(3).dim(), 3u);
}

TEST(Algebra, TruncatedPolynomialProducts) {
  const FiniteAlgebra a = catalog::trunc_poly(3);
  const Vector x = a.basis(1);
  EXPECT_EQ(a.multiply(x, x), a.basis(2));
  EXPECT_TRUE(a.multiply(x, a.basis(2)).is_zero());
  EXPECT_EQ(a.multiply(a.unit(), x), x);
  EXPECT_TRUE(a.is_commutative());
  EXPECT_EQ(a.center().dim(), 3u);
}

TEST(Algebra, QuaternionRelations) {
  const FiniteAlgebra h = catalog::quaternions();
  const Vector i = h.basis(1), j = h.basis(2), k = h.basis(3);
  EXPECT_EQ(h.multiply(i, j), k);
  EXPECT_EQ(h.multiply(j, i), -k);
  EXPECT_EQ(h.multiply(h.multiply(i, j), k), -h.unit());
  EXPECT_FALSE(h.is_commutative());
  EXPECT_EQ(h.center().dim(), 1u);
}

TEST(Algebra, MatrixUnits) {
  const FiniteAlgebra m = catalog::matrix(2);
  EXPECT_EQ(m.multiply(m.basis(1), m.basis(2)), m.basis(0));  // e01 e10 = e00
  EXPECT_TRUE(m.multiply(m.basis(2), m.basis(2)).is_zero());
  EXPECT_EQ(m.center().dim(), 1u);
}

TEST(Algebra, GrassmannIsGradedCommutative) {
  const FiniteAlgebra g = catalog::grassmann(2);
  ASSERT_TRUE(g.is_graded());
  EXPECT_TRUE(g.is_graded_commutative());
  EXPECT_FALSE(g.is_commutative());
  EXPECT_EQ(g.multiply(g.basis(1), g.basis(2)), -g.multiply(g.basis(2), g.basis(1)));
  EXPECT_EQ(g.element_parity(g.basis(3)), 0);
  EXPECT_EQ(g.element_parity(g.basis(1)), 1);
  EXPECT_FALSE(g.element_parity(g.basis(0) + g.basis(1)).has_value());
  EXPECT_THROW(catalog::matrix(2).is_graded_commutative(), InvalidArgument);
}

TEST(Algebra, ValidateReportsBrokenAssociativity) {
  const Field q = Field::rationals();
  std::vector<mpq_class> sc(27);
  auto set = [&](int i, int j, int k) { sc[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0), set(0, 1, 1), set(0, 2, 2), set(1, 0, 1), set(2, 0, 2), set(1, 1, 2), set(2, 1, 1);
  const FiniteAlgebra bad(q, "skew", {"1", "a", "b"}, sc, Vector::unit(q, 3, 0));
  const ValidationReport r = bad.validate();
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.failures.empty());
}

TEST(Algebra, OppositeAndProduct) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const FiniteAlgebra op = t.opposite();
  EXPECT_TRUE(op.validate().ok());
  EXPECT_EQ(op.multiply(t.basis(1), t.basis(0)), t.multiply(t.basis(0), t.basis(1)));
  const FiniteAlgebra p = catalog::product(catalog::scalar(), catalog::trunc_poly(2));
  EXPECT_EQ(p.dim(), 3u);
  EXPECT_TRUE(p.validate().ok());
  EXPECT_EQ(p.center().dim(), 3u);
}

TEST(Algebra, PrimeField) {
  const FiniteAlgebra g = catalog::group_algebra(3, Field::prime(3));
  EXPECT_TRUE(g.validate().ok());
  EXPECT_EQ(g.field().characteristic(), 3u);
}
