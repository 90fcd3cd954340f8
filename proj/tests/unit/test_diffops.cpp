#include <gtest/gtest.h>

#include "ncdiff/derivations.hpp"
#include "ncdiff/diffops.hpp"
#include "ncdiff/errors.hpp"

using namespace ncdiff;

namespace {
HomSpace regular_hom(const FiniteAlgebra& a) { return HomSpace(regular_bimodule(a), regular_bimodule(a)); }
}  // namespace

TEST(Grothendieck, ChainIsMonotone) {
  const HomSpace h = regular_hom(catalog::trunc_poly(4));
  const Filtration g = grothendieck_chain(h, 3);
  EXPECT_TRUE(g.monotone());
  EXPECT_EQ(g[0].dim(), 4u);
  EXPECT_EQ(g[3].dim(), 12u);  // dim A(x)A / I^4, and I^4 != 0 here
  EXPECT_EQ(grothendieck_diff(h, 2).space, g[2]);
  EXPECT_FALSE(grothendieck_diff(h, 1).naive);
}

TEST(Grothendieck, NaiveOverMatrices) {
  const HomSpace h = regular_hom(catalog::matrix(2));
  const DiffSpace d = grothendieck_diff(h, 1);
  EXPECT_TRUE(d.naive);
  EXPECT_EQ(d.space.dim(), 4u);
}

TEST(Dv, FirstOrderOnMatrices) {
  const FiniteAlgebra m = catalog::matrix(2);
  const HomSpace h = regular_hom(m);
  const DiffSpace dv = dv_first_order(h);
  EXPECT_EQ(dv.space.dim(), 7u);  // left mult (4) + inner derivations (3)
  for (const auto& u : derivations(m).basis_maps()) {
    EXPECT_TRUE(dv.space.contains(h.flatten(u)));
    const DvSplit s = dv_split(h, u);
    EXPECT_TRUE(s.ok());
  }
  Matrix not_dv = Matrix::identity(m.field(), 4);
  not_dv.set(0, 1, 1);
  EXPECT_THROW(dv_split(h, not_dv), NotMember);
}

TEST(ZeroOrder, SidedLinearMaps) {
  const HomSpace h = regular_hom(catalog::matrix(2));
  EXPECT_EQ(left_zero_order(h).dim(), 4u);
  EXPECT_EQ(right_zero_order(h).dim(), 4u);
  EXPECT_EQ(bimodule_maps(h).dim(), 1u);
}

TEST(Lunts, MatrixAlgebraCollapsesToEverything) {
  const HomSpace h = regular_hom(catalog::matrix(2));
  const Filtration l = lunts_filtration(h, 2, Side::left);
  EXPECT_TRUE(l.monotone());
  // right multiplications, closed under left multiplication, already give End(M_2)
  EXPECT_EQ(l[0].dim(), 16u);
  EXPECT_EQ(l[1].dim(), 16u);
  EXPECT_EQ(lunts_filtration(h, 1, Side::right)[1].dim(), 16u);
}

TEST(Lunts, FormsAgreeOnCommutative) {
  const HomSpace h = regular_hom(catalog::trunc_xy());
  const Filtration a = lunts_filtration(h, 2, Side::left);
  const Filtration b = lunts_filtration(h, 2, Side::left, LuntsForm::representatives);
  for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(a[k], b[k]);
}

TEST(TwoSided, ZeroOrderSpan) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const Field& f = t.field();
  const Bimodule s12 = character_bimodule(t, Vector::from_ints(f, {1, 0, 0}), Vector::from_ints(f, {0, 0, 1}));
  const HomSpace h(s12, regular_bimodule(t));
  const TwoSidedFiltration ts = two_sided_filtration(h, 1);
  EXPECT_FALSE(ts.zero_order_union_is_subspace);
  EXPECT_EQ(lunts_filtration(h, 0, Side::left)[0].dim(), 2u);
  EXPECT_EQ(lunts_filtration(h, 0, Side::right)[0].dim(), 2u);
  EXPECT_EQ(ts.filtration[0].dim(), 3u);
  EXPECT_TRUE(ts.filtration.monotone());
  EXPECT_TRUE(two_sided_filtration(regular_hom(catalog::matrix(2)), 0).zero_order_union_is_subspace);
}

TEST(Composition, ThrowsOnNonMembers) {
  const FiniteAlgebra a = catalog::trunc_poly(3);
  const HomSpace h = regular_hom(a);
  const Filtration l = lunts_filtration(h, 2, Side::left);
  const Matrix d = derivations(a).basis_map(0);
  EXPECT_TRUE(composition_order_check(h, l, d, 1, d, 1));
  EXPECT_THROW(composition_order_check(h, l, d, 0, d, 1), NotMember);
}

TEST(Compare, CharacterBimodulesSeparateDefinitions) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const Bimodule s12 = character_bimodule(t, Vector::from_ints(t.field(), {1, 0, 0}),
                                          Vector::from_ints(t.field(), {0, 0, 1}));
  const HomSpace h(s12, regular_bimodule(t));
  const Comparison c = compare_definitions(h, 1);
  EXPECT_FALSE(c.all_equal());
  const Subspace dv = dv_first_order(h).space;
  const Subspace l1 = lunts_filtration(h, 1, Side::left)[1];
  const auto w = witness_outside(dv, l1);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(dv.contains(*w));
  EXPECT_FALSE(l1.contains(*w));
}

TEST(Compare, AllEqualOnCommutative) {
  const Comparison c = compare_definitions(regular_hom(catalog::group_algebra(3)), 1);
  EXPECT_TRUE(c.all_equal());
  for (std::size_t i = 0; i < c.names.size(); ++i)
    for (std::size_t j = 0; j < c.names.size(); ++j) EXPECT_FALSE(c.witness[i][j].has_value());
}

TEST(GradedDiff, GrassmannFirstOrder) {
  const FiniteAlgebra g = catalog::grassmann(2);
  const HomSpace h = regular_hom(g);
  const DiffSpace d = graded_diff(h, 1);
  EXPECT_EQ(d.space.dim(), 12u);  // A (4) + graded derivations (8)
  EXPECT_TRUE(graded_chain(h, 2).monotone());
}
