#include <gtest/gtest.h>

#include "ncdiff/ce.hpp"
#include "ncdiff/errors.hpp"

using namespace ncdiff;

TEST(CE, FormDimensions) {
  const CEComplex xy(catalog::trunc_xy(), 3);
  EXPECT_EQ(xy.derivation_dim(), 4u);
  EXPECT_EQ(xy.forms(0).dim(), 3u);
  EXPECT_EQ(xy.forms(1).dim(), 8u);
  EXPECT_EQ(xy.forms(2).dim(), 12u);
  EXPECT_EQ(xy.forms(3).dim(), 8u);
  const CEComplex m(catalog::matrix(2), 3);
  EXPECT_EQ(m.forms(1).dim(), 12u);
  EXPECT_EQ(m.forms(2).dim(), 12u);
  EXPECT_EQ(m.forms(3).dim(), 4u);
  EXPECT_THROW(m.forms(4), InvalidArgument);
  EXPECT_THROW(m.coboundary(3), InvalidArgument);
  EXPECT_THROW(CEComplex(catalog::scalar(), 0), InvalidArgument);
}

TEST(CE, SquareZeroAndSubcomplex) {
  for (const auto& a : {catalog::trunc_poly(3), catalog::quaternions(), catalog::upper_triangular(2)}) {
    const CEComplex ce(a, 3);
    EXPECT_TRUE(ce.dd_vanishes(0)) << a.name();
    EXPECT_TRUE(ce.dd_vanishes(1)) << a.name();
    for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(ce.d_preserves_forms(k)) << a.name();
  }
}

TEST(CE, DaEvaluates) {
  const FiniteAlgebra a = catalog::trunc_xy();
  const CEComplex ce(a, 2);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t u = 0; u < ce.derivation_dim(); ++u)
      EXPECT_EQ(ce.evaluate(ce.da(a.basis(i)), {u}), ce.derivation_basis()[u] * a.basis(i));
  EXPECT_TRUE(ce.da(a.unit()).is_zero());
}

TEST(CE, WedgeAlternates) {
  const CEComplex ce(catalog::trunc_xy(), 2);
  const auto b = ce.forms(1).basis_vectors();
  for (const auto& x : b)
    for (const auto& y : b) EXPECT_EQ(ce.wedge(x, 1, y, 1), -ce.wedge(y, 1, x, 1));
  EXPECT_THROW(ce.wedge(b[0], 1, ce.wedge(b[0], 1, b[1], 1), 2), InvalidArgument);
}

TEST(CE, MinimalCalculusAndDuality) {
  const CEComplex m(catalog::matrix(2), 2);
  const MinimalCalculus mc = minimal_calculus(m);
  EXPECT_EQ(mc.o1.module.dim(), 12u);
  EXPECT_EQ(mc.o2.module.dim(), 12u);
  const DualityReport r = ce_duality_check(m, mc);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.derivation_dim, 3u);
  const CEComplex t(catalog::trunc_poly(3), 2);
  const MinimalCalculus mt = minimal_calculus(t);
  EXPECT_EQ(mt.o1.module.dim(), 2u);
  EXPECT_EQ(ce_duality_check(t, mt).hom_dim, 2u);
}

TEST(CE, CenterRelationsAndOrder) {
  const CEComplex q(catalog::quaternions(), 2);
  EXPECT_TRUE(ce_center_relations_hold(q));
  const MinimalCalculus mq = minimal_calculus(q);
  EXPECT_TRUE(ce_d_is_dv_first_order(q, mq, 0));
  EXPECT_TRUE(ce_d_is_dv_first_order(q, mq, 1));
  const CEComplex t(catalog::trunc_xy(), 3);
  EXPECT_TRUE(ce_d_is_first_order(t, 0));
  EXPECT_TRUE(ce_d_is_first_order(t, 1));
}

TEST(CE, ZeroDerivations) {
  const CEComplex g(catalog::group_algebra(3), 2);
  EXPECT_EQ(g.derivation_dim(), 0u);
  EXPECT_EQ(g.forms(1).dim(), 0u);
  EXPECT_TRUE(g.dd_vanishes(0));
}
