#include <gtest/gtest.h>

#include "ncdiff/errors.hpp"
#include "ncdiff/graded_ce.hpp"

using namespace ncdiff;

TEST(GradedCE, NormalTuples) {
  const GradedCEComplex c(catalog::grassmann(1), 3);
  // Lambda(t): derivations t d/dt (even) and d/dt (odd)
  ASSERT_EQ(c.derivation_dim(), 2u);
  std::size_t even = 0, odd = 1;
  if (c.derivation_parity(0) == 1) std::swap(even, odd);
  EXPECT_EQ(c.normal({even, even}).first, 0);
  EXPECT_EQ(c.normal({odd, odd}).first, 1);
  const auto [s, t] = c.normal({odd, even});
  EXPECT_EQ(s, -1);
  EXPECT_EQ(t, (std::vector<std::size_t>{even, odd}));
  EXPECT_EQ(c.tuples(2).size(), 2u);  // (e, o) and (o, o)
  EXPECT_EQ(c.cochain_dim(2), 4u);
}

TEST(GradedCE, Dimensions) {
  const GradedCEComplex c(catalog::grassmann(2), 3);
  EXPECT_EQ(c.derivation_dim(), 8u);
  EXPECT_EQ(c.cochain_dim(1), 32u);
  EXPECT_EQ(c.cochain_dim(2), 128u);
  EXPECT_EQ(c.linear_forms(1).dim(), 8u);
  EXPECT_EQ(c.linear_forms(2).dim(), 12u);
  EXPECT_EQ(c.linear_forms(3).dim(), 16u);
}

TEST(GradedCE, SquareZero) {
  for (std::size_t g = 1; g <= 2; ++g) {
    const GradedCEComplex c(catalog::grassmann(g), 3);
    EXPECT_TRUE(c.dd_vanishes(0));
    EXPECT_TRUE(c.dd_vanishes(1));
    EXPECT_TRUE(c.d_preserves_forms(0));
    EXPECT_TRUE(c.d_preserves_forms(1));
  }
}

TEST(GradedCE, Preconditions) {
  EXPECT_THROW(GradedCEComplex(catalog::matrix(2)), InvalidArgument);
  EXPECT_THROW(GradedCEComplex(catalog::grassmann(1), 5), InvalidArgument);
  const GradedCEComplex c(catalog::grassmann(1), 2);
  EXPECT_THROW(c.dd_vanishes(1), InvalidArgument);
}

TEST(GradedCE, DOfElementEvaluates) {
  const FiniteAlgebra g = catalog::grassmann(2);
  const GradedCEComplex c(g, 2);
  const DerivationSpace& der = c.derivations();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Vector da = c.d(g.basis(i), 0);
    for (std::size_t l = 0; l < c.derivation_dim(); ++l) {
      const Vector lhs = c.evaluate(da, {l});
      const Vector ua = der.basis_map(l) * g.basis(i);
      EXPECT_TRUE(lhs == ua || lhs == -ua) << i << " " << l;
    }
  }
}
