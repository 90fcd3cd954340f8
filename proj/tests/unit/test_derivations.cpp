#include <gtest/gtest.h>

#include "ncdiff/derivations.hpp"
#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"

using namespace ncdiff;

TEST(Derivations, KnownDimensions) {
  EXPECT_EQ(derivations(catalog::scalar()).dim(), 0u);
  EXPECT_EQ(derivations(catalog::trunc_poly(2)).dim(), 1u);
  EXPECT_EQ(derivations(catalog::trunc_poly(3)).dim(), 2u);
  EXPECT_EQ(derivations(catalog::trunc_xy()).dim(), 4u);
  EXPECT_EQ(derivations(catalog::group_algebra(3)).dim(), 0u);
  EXPECT_EQ(derivations(catalog::matrix(2)).dim(), 3u);
  EXPECT_EQ(derivations(catalog::quaternions()).dim(), 3u);
  EXPECT_EQ(derivations(catalog::upper_triangular(2)).dim(), 2u);
}

TEST(Derivations, LeibnizOnBasis) {
  const FiniteAlgebra m = catalog::matrix(2);
  const DerivationSpace d = derivations(m);
  for (const auto& u : d.basis_maps())
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Vector a = m.basis(i), b = m.basis(j);
        EXPECT_EQ(u * m.multiply(a, b), m.multiply(u * a, b) + m.multiply(a, u * b));
      }
}

TEST(Derivations, InnerDerivationsOfM2) {
  const FiniteAlgebra m = catalog::matrix(2);
  const DerivationSpace d = derivations(m);
  for (std::size_t q = 0; q < 4; ++q) {
    const Matrix ad = m.left_mult(m.basis(q)) - m.right_mult(m.basis(q));
    EXPECT_TRUE(d.contains(ad));
  }
}

TEST(Derivations, LieBracketClosed) {
  const FiniteAlgebra a = catalog::trunc_xy();
  const DerivationSpace d = derivations(a);
  for (const auto& u : d.basis_maps())
    for (const auto& v : d.basis_maps()) EXPECT_TRUE(d.contains(lie_bracket(a, u, v)));
  EXPECT_THROW(lie_bracket(a, Matrix::identity(a.field(), 3), d.basis_map(0)), NotMember);
}

TEST(Derivations, GradedGrassmann) {
  const FiniteAlgebra g = catalog::grassmann(2);
  const DerivationSpace d = derivations(g, true);
  EXPECT_EQ(d.dim(), 8u);
  std::size_t odd = 0;
  for (int p : d.parities) odd += p;
  EXPECT_EQ(odd, 4u);
  for (std::size_t i = 0; i < d.dim(); ++i) EXPECT_EQ(map_parity(g, d.basis_map(i)), d.parities[i]);
  for (const auto& u : d.basis_maps())
    for (const auto& v : d.basis_maps()) EXPECT_TRUE(d.contains(super_bracket(g, u, v)));
  EXPECT_THROW(derivations(catalog::trunc_poly(2), true), InvalidArgument);
}

TEST(Derivations, IntoBimodule) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const Bimodule s12 = character_bimodule(t, Vector::from_ints(t.field(), {1, 0, 0}),
                                          Vector::from_ints(t.field(), {0, 0, 1}));
  const DerivationSpace d = derivations(s12);
  EXPECT_EQ(d.dim(), 2u);  // inner derivation of the generator plus e12 -> 1
}

TEST(FirstOrderSplit, CommutativeDecomposition) {
  const FiniteAlgebra a = catalog::trunc_poly(3);
  const HomSpace h(regular_bimodule(a), regular_bimodule(a));
  const Subspace diff1 = grothendieck_diff(h, 1).space;
  const FirstOrderSplit s = first_order_decomposition(h, diff1, SplitFlavor::commutative);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.zero_order.dim(), 3u);
  EXPECT_EQ(s.derivation_part.dim(), 2u);
  for (const auto& v : diff1.basis_vectors()) {
    const auto [z, d] = s.split(h, h.unflatten(v), SplitFlavor::commutative);
    EXPECT_EQ(z + d, h.unflatten(v));
    EXPECT_TRUE(derivations(a).contains(d));
  }
  const FiniteAlgebra m = catalog::matrix(2);
  const HomSpace hm(regular_bimodule(m), regular_bimodule(m));
  EXPECT_THROW(first_order_decomposition(hm, grothendieck_diff(hm, 1).space, SplitFlavor::commutative),
               InvalidArgument);
}
