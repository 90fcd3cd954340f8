#include <gtest/gtest.h>

#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/jets.hpp"
#include "ncdiff/linalg.hpp"

using namespace ncdiff;

TEST(Jets, TruncatedDimensions) {
  // A (x) A / I^{k+1} for A = K[x]/(x^3), I = (y - x)
  const Bimodule reg = regular_bimodule(catalog::trunc_poly(3));
  EXPECT_EQ(jet_module(reg, 0).dim(), 3u);
  EXPECT_EQ(jet_module(reg, 1).dim(), 5u);
  EXPECT_EQ(jet_module(reg, 2).dim(), 7u);
}

TEST(Jets, RepresentsGrothendieck) {
  const FiniteAlgebra a = catalog::trunc_xy();
  const Bimodule reg = regular_bimodule(a);
  for (std::size_t k = 0; k <= 2; ++k) {
    const JetModule jm = jet_module(reg, k);
    EXPECT_TRUE(jk_is_diffop(jm)) << k;
    const Representability r = representability(jm, reg);
    EXPECT_TRUE(r.ok()) << k;
    EXPECT_EQ(r.diff_dim, grothendieck_diff(HomSpace(reg, reg), k).space.dim()) << k;
  }
}

TEST(Jets, ZeroOrderIsP) {
  const Bimodule reg = regular_bimodule(catalog::trunc_poly(3));
  const JetModule jm = jet_module(reg, 0);
  EXPECT_EQ(rank(jm.j), 3u);
}

TEST(Jets, TwoSidedMatrices) {
  const FiniteAlgebra m = catalog::matrix(2);
  const Bimodule reg = regular_bimodule(m);
  const JetModule jm = two_sided_jet(reg);
  EXPECT_TRUE(jk_is_diffop(jm));
  const Representability r = representability(jm, reg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.hom_dim, 7u);
  EXPECT_EQ(r.diff_dim, dv_first_order(HomSpace(reg, reg)).space.dim());
}

TEST(Jets, Preconditions) {
  EXPECT_THROW(jet_module(regular_bimodule(catalog::matrix(2)), 1), InvalidArgument);
  EXPECT_THROW(jet_module(regular_bimodule(catalog::trunc_poly(3)), 3), InvalidArgument);
}

TEST(Jets, LeftIdentity) {
  const Bimodule m = regular_bimodule(catalog::matrix(2));
  const auto w = left_jet_identity_failure(m, m, 1);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(w->difference.is_zero());
  const Bimodule t = regular_bimodule(catalog::trunc_poly(3));
  EXPECT_FALSE(left_jet_identity_failure(t, t, 1).has_value());
}
