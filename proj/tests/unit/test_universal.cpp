#include <gtest/gtest.h>

#include "ncdiff/derivations.hpp"
#include "ncdiff/errors.hpp"
#include "ncdiff/universal.hpp"

using namespace ncdiff;

TEST(Universal, Dimensions) {
  for (const auto& a : {catalog::trunc_poly(3), catalog::matrix(2), catalog::quaternions(), catalog::upper_triangular(2)}) {
    const UniversalForms u = universal_forms(a);
    const std::size_t n = a.dim();
    EXPECT_EQ(u.omega1.dim(), n * n - n) << a.name();
    EXPECT_EQ(u.omega2.dim(), n * (n - 1) * (n - 1)) << a.name();
    EXPECT_EQ(u.kernel_m, u.omega1) << a.name();
    EXPECT_TRUE(u.calculus.validate().ok()) << a.name();
    EXPECT_TRUE(u.calculus.is_generated()) << a.name();
  }
  const UniversalForms s = universal_forms(catalog::scalar());
  EXPECT_EQ(s.omega1.dim(), 0u);
  EXPECT_EQ(s.omega2.dim(), 0u);
}

TEST(Universal, Relations) {
  const UniversalForms u = universal_forms(catalog::quaternions());
  EXPECT_TRUE(universal_relation_holds(u));
  EXPECT_TRUE(juxtaposition_rule_holds(u));
  const FiniteAlgebra& a = u.algebra;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vector x = a.basis(i), y = a.basis(j);
      const Vector w = u.d_ambient(x);
      EXPECT_EQ(u.product_ambient(w, u.d_ambient(y)), u.d1_ambient(u.left_ambient(x, u.d_ambient(y))));
      EXPECT_TRUE(u.d1_ambient(w).is_zero());
    }
}

TEST(Universal, CentralRelationOnTruncated) {
  const UniversalForms u = universal_forms(catalog::trunc_poly(2));
  const auto w = central_relation_failure(u);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(w->difference.is_zero());
  const Vector direct = u.left_ambient(w->a, u.d_ambient(w->a2)) - u.right_ambient(u.d_ambient(w->a2), w->a);
  EXPECT_EQ(direct, w->difference);
  EXPECT_FALSE(central_relation_failure(universal_forms(catalog::scalar())).has_value());
}

TEST(Universal, FactorizesInnerDerivations) {
  const FiniteAlgebra m = catalog::matrix(2);
  const UniversalForms u = universal_forms(m);
  const Bimodule reg = regular_bimodule(m);
  for (const auto& delta : derivations(m).basis_maps()) {
    const Factorization f = universal_factorize(u, reg, delta);
    EXPECT_TRUE(f.unique);
    EXPECT_EQ(f.f * u.calculus.d0, delta);
  }
  EXPECT_THROW(universal_factorize(u, reg, Matrix::identity(m.field(), 4)), NotMember);
}

TEST(Universal, ExtendsIdentity) {
  const FiniteAlgebra a = catalog::trunc_xy();
  const UniversalForms u = universal_forms(a);
  const Matrix id = Matrix::identity(a.field(), a.dim());
  const HomExtension self = extend_hom(u, id, u.calculus);
  EXPECT_TRUE(self.ok());
  EXPECT_TRUE(self.surjective1);
  const CEComplex ce(a, 2);
  const HomExtension to_ce = extend_hom(u, id, ce_calculus(ce, minimal_calculus(ce)));
  EXPECT_TRUE(to_ce.ok());
  const HomExtension to_zero = extend_hom(u, id, zero_calculus(a));
  EXPECT_TRUE(to_zero.ok());
  EXPECT_THROW(extend_hom(u, Matrix(a.field(), 3, 3), u.calculus), InvalidArgument);
}
