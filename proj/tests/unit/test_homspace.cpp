#include <gtest/gtest.h>

#include "ncdiff/errors.hpp"
#include "ncdiff/homspace.hpp"

using namespace ncdiff;

TEST(HomSpace, FlatIndexConvention) {
  const FiniteAlgebra a = catalog::trunc_poly(2);
  const HomSpace h(regular_bimodule(a), free_module(a, 2));
  EXPECT_EQ(h.dim(), 8u);
  Matrix phi(a.field(), 4, 2);
  phi.set(3, 1, 5);
  EXPECT_EQ(h.flatten(phi)[h.index(3, 1)], 5);
  EXPECT_EQ(h.unflatten(h.flatten(phi)), phi);
}

TEST(HomSpace, ActionsMatchDefinitions) {
  const FiniteAlgebra m = catalog::matrix(2);
  const Bimodule p = regular_bimodule(m);
  const HomSpace h(p, p);
  const Matrix phi = m.left_mult(m.basis(1)) + m.right_mult(m.basis(2));
  const Vector a = m.basis(2) + m.basis(3), x = m.basis(1);
  EXPECT_EQ(h.act(Action::left, a, phi) * x, m.multiply(a, phi * x));
  EXPECT_EQ(h.act(Action::left_bullet, a, phi) * x, phi * m.multiply(a, x));
  EXPECT_EQ(h.act(Action::right, a, phi) * x, m.multiply(phi * x, a));
  EXPECT_EQ(h.act(Action::right_bullet, a, phi) * x, phi * m.multiply(x, a));
  EXPECT_EQ(h.delta(a, phi), h.act(Action::left, a, phi) - h.act(Action::left_bullet, a, phi));
  EXPECT_EQ(h.bar_delta(a, phi), h.act(Action::right, a, phi) - h.act(Action::right_bullet, a, phi));
  EXPECT_EQ(h.op(Action::left, a).apply(h.flatten(phi)), h.flatten(h.act(Action::left, a, phi)));
}

TEST(HomSpace, IteratedDeltas) {
  const FiniteAlgebra a = catalog::trunc_poly(3);
  const HomSpace h(regular_bimodule(a), regular_bimodule(a));
  const Matrix id = Matrix::identity(a.field(), 3);
  EXPECT_TRUE(h.iterated_delta_vanishes(id, 0));
  Matrix euler(a.field(), 3, 3);
  euler.set(1, 1, 1);
  euler.set(2, 2, 2);
  EXPECT_FALSE(h.iterated_delta_vanishes(euler, 0));
  EXPECT_TRUE(h.iterated_delta_vanishes(euler, 1));
}

TEST(HomSpace, GradedDeltaSigns) {
  const FiniteAlgebra g = catalog::grassmann(1);
  const HomSpace h(regular_bimodule(g), regular_bimodule(g));
  const Vector t = g.basis(1);
  const Matrix lt = g.left_mult(t);  // odd map
  EXPECT_EQ(h.parity(lt), 1);
  // t L_t - (-1) L_t(t .) = t t x + t t x = 0
  EXPECT_TRUE(h.graded_delta(t, lt).is_zero());
  EXPECT_THROW(h.graded_delta(g.basis(0) + t, lt), InvalidArgument);
  const HomSpace plain(regular_bimodule(catalog::trunc_poly(2)), regular_bimodule(catalog::trunc_poly(2)));
  EXPECT_THROW(plain.graded_deltas(), InvalidArgument);
}
