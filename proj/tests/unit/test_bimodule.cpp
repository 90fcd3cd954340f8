#include <gtest/gtest.h>

#include "ncdiff/bimodule.hpp"
#include "ncdiff/errors.hpp"

using namespace ncdiff;

TEST(Bimodule, StandardModulesValidate) {
  for (const auto& a : {catalog::trunc_poly(3), catalog::matrix(2), catalog::upper_triangular(2)}) {
    EXPECT_TRUE(regular_bimodule(a).validate().ok());
    EXPECT_TRUE(free_module(a, 2).validate().ok());
    EXPECT_TRUE(zero_module(a).validate().ok());
    EXPECT_TRUE(tensor_A_P(regular_bimodule(a)).outer.validate().ok());
    EXPECT_TRUE(tensor_A_P_A(regular_bimodule(a)).outer.validate().ok());
  }
}

TEST(Bimodule, ActionConvention) {
  const FiniteAlgebra m = catalog::matrix(2);
  const Bimodule p = regular_bimodule(m);
  const Vector a = m.basis(1), x = m.basis(2), b = m.basis(3);
  EXPECT_EQ(p.act(a, x, b), m.multiply(m.multiply(a, x), b));
  EXPECT_EQ(p.left(1) * x, m.multiply(a, x));
}

TEST(Bimodule, Centrality) {
  EXPECT_TRUE(regular_bimodule(catalog::trunc_xy()).is_central());
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const Field& f = t.field();
  const Vector chi1 = Vector::from_ints(f, {1, 0, 0}), chi2 = Vector::from_ints(f, {0, 0, 1});
  const Bimodule s12 = character_bimodule(t, chi1, chi2);
  EXPECT_TRUE(s12.validate().ok());
  EXPECT_TRUE(s12.is_central());  // the center of T_2 is the scalars
  const FiniteAlgebra g = catalog::group_algebra(2);
  const Bimodule twisted = character_bimodule(g, Vector::from_ints(f, {1, 1}), Vector::from_ints(f, {1, -1}));
  EXPECT_FALSE(twisted.is_central());
  EXPECT_TRUE(character_bimodule(g, Vector::from_ints(f, {1, -1}), Vector::from_ints(f, {1, -1})).is_central());
}

TEST(Bimodule, CharacterMustBeMultiplicative) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const Vector bad = Vector::from_ints(t.field(), {1, 1, 0});
  EXPECT_THROW(character_bimodule(t, bad, bad), InvalidArgument);
}

TEST(Bimodule, DirectSumAndOpposite) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const Bimodule s = direct_sum(regular_bimodule(t), free_module(t, 1));
  EXPECT_EQ(s.dim(), 6u);
  EXPECT_TRUE(s.validate().ok());
  const Bimodule op = opposite(regular_bimodule(t));
  EXPECT_TRUE(op.validate().ok());
  EXPECT_EQ(op.left(1), regular_bimodule(t).right(1));
}

TEST(Bimodule, RightDualOfRegular) {
  const FiniteAlgebra m = catalog::matrix(2);
  const EmbeddedModule d = right_dual(regular_bimodule(m));
  EXPECT_EQ(d.module.dim(), 4u);  // right-linear maps A -> A are left multiplications
  EXPECT_TRUE(d.module.validate().ok());
  const EmbeddedModule l = left_dual(regular_bimodule(m));
  EXPECT_EQ(l.module.dim(), 4u);
  EXPECT_TRUE(l.module.validate().ok());
}

TEST(TensorModule, DeltaKillsOnlyOnBalancedElements) {
  const FiniteAlgebra a = catalog::trunc_poly(2);
  const TensorModule t = tensor_A_P(regular_bimodule(a));
  EXPECT_EQ(t.outer.dim(), 4u);
  // delta^x (1 (x) 1) = x (x) 1 - 1 (x) x
  Vector one(a.field(), 4);
  one.set(t.index(0, 0), 1);
  Vector expect(a.field(), 4);
  expect.set(t.index(1, 0), 1);
  expect.set(t.index(0, 1), -1);
  EXPECT_EQ(t.delta(1) * one, expect);
  EXPECT_THROW(t.bar_delta(1), Error);
}

TEST(RestrictModule, RejectsUnstableSubspace) {
  const FiniteAlgebra a = catalog::trunc_poly(2);
  const Bimodule p = regular_bimodule(a);
  std::vector<SparseMatrix> l, r;
  for (std::size_t i = 0; i < 2; ++i) {
    l.emplace_back(p.left(i));
    r.emplace_back(p.right(i));
  }
  const Subspace ideal = Subspace::span(a.field(), 2, {a.basis(1)});
  EXPECT_EQ(restrict_module(a, "xA", ideal, l, r).module.dim(), 1u);
  const Subspace units = Subspace::span(a.field(), 2, {a.basis(0)});
  EXPECT_THROW(restrict_module(a, "bad", units, l, r), NotMember);
}
