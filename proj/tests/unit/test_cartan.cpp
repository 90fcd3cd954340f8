#include <gtest/gtest.h>

#include "ncdiff/cartan.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/universal.hpp"

using namespace ncdiff;

TEST(Cartan, UniversalOverMatrices) {
  const UniversalForms u = universal_forms(catalog::matrix(2));
  for (Side side : {Side::right, Side::left}) {
    const CartanPair pair = build_cartan_pair(u.calculus.omega1, u.calculus.d0, side);
    EXPECT_EQ(pair.dim(), 12u);
    EXPECT_TRUE(pair.relations_hold());
    const CartanReport r = cartan_vs_definitions(pair);
    EXPECT_EQ(r.dual_dim, 12u);
    EXPECT_EQ(r.two_sided_dim, 3u);
    EXPECT_TRUE(r.two_sided_dv);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_FALSE(r.witness->value.is_zero());
    EXPECT_FALSE(r.entries[r.witness->dual_index].dv_first_order);
  }
  EXPECT_TRUE(cartan_mirror_holds(u.calculus.omega1, u.calculus.d0));
}

TEST(Cartan, CeCalculusOverCommutative) {
  const CEComplex ce(catalog::trunc_poly(3), 2);
  const MinimalCalculus mc = minimal_calculus(ce);
  const CartanPair pair = build_cartan_pair(mc.o1.module, mc.d0, Side::right);
  const CartanReport r = cartan_vs_definitions(pair);
  EXPECT_EQ(r.dual_dim, 2u);
  for (const auto& e : r.entries) {
    EXPECT_TRUE(e.derivation);
    ASSERT_TRUE(e.grothendieck1.has_value());
    EXPECT_TRUE(*e.grothendieck1);
  }
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Cartan, RejectsNonDerivation) {
  const FiniteAlgebra m = catalog::matrix(2);
  EXPECT_THROW(build_cartan_pair(regular_bimodule(m), Matrix::identity(m.field(), 4), Side::right), NotMember);
}
