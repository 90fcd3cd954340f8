#include <gtest/gtest.h>

#include "ncdiff/ce.hpp"
#include "ncdiff/derivations.hpp"
#include "ncdiff/diffops.hpp"
#include "ncdiff/linalg.hpp"
#include "ncdiff/universal.hpp"

#include "brute.hpp"

using namespace ncdiff;
using namespace brute;

TEST(Oracle, GrothendieckByWords) {
  for (const auto& a : {catalog::trunc_poly(3), catalog::trunc_xy(), catalog::upper_triangular(2)}) {
    const Bimodule reg = regular_bimodule(a);
    const HomSpace h(reg, reg);
    for (std::size_t k = 0; k <= 2; ++k)
      EXPECT_EQ(grothendieck_diff(h, k).space, brute_grothendieck(reg, reg, k)) << a.name() << " k=" << k;
  }
  const FiniteAlgebra m = catalog::matrix(2);
  const Bimodule reg = regular_bimodule(m);
  const Bimodule f2 = free_module(m, 2);
  for (std::size_t k = 0; k <= 1; ++k) {
    EXPECT_EQ(grothendieck_diff(HomSpace(reg, reg), k).space, brute_grothendieck(reg, reg, k));
    EXPECT_EQ(grothendieck_diff(HomSpace(reg, f2), k).space, brute_grothendieck(reg, f2, k));
  }
}

TEST(Oracle, DerivationsByLeibniz) {
  for (const auto& a : ungraded()) EXPECT_EQ(derivations(a).space, brute_derivations(a, false, 0)) << a.name();
}

TEST(Oracle, GradedDerivationsByLeibniz) {
  for (std::size_t g = 1; g <= 2; ++g) {
    const FiniteAlgebra a = catalog::grassmann(g);
    const DerivationSpace d = derivations(a, true);
    const Subspace even = brute_derivations(a, true, 0), odd = brute_derivations(a, true, 1);
    EXPECT_EQ(d.space, sum(even, odd)) << g;
    EXPECT_EQ(d.dim(), even.dim() + odd.dim()) << g;
    for (std::size_t i = 0; i < d.dim(); ++i) {
      const Vector v = d.space.basis_vector(i);
      EXPECT_TRUE((d.parities[i] == 0 ? even : odd).contains(v)) << g << " " << i;
    }
  }
}

TEST(Oracle, OmegaTwoAsQuotient) {
  const FiniteAlgebra a = catalog::matrix(2);
  const std::size_t n = a.dim();
  const Field& f = a.field();
  const Subspace o1 = kernel(multiplication(a));
  const std::size_t m = o1.dim();
  ASSERT_EQ(m, 12u);
  const auto w = o1.basis_vectors();

  // Omega^1 (x)_K Omega^1 modulo (w a) (x) w' - w (x) (a w')
  std::vector<Vector> rel;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t e = 0; e < n; ++e) {
      const Vector wa = o1.coordinates(mult_right2(a, w[i], e));
      for (std::size_t j = 0; j < m; ++j) {
        const Vector aw = o1.coordinates(mult_left2(a, e, w[j]));
        Vector r(f, m * m);
        for (std::size_t s = 0; s < m; ++s) {
          r.add_scaled_at(s * m + j, wa[s]);
          r.add_scaled_at(i * m + s, -aw[s]);
        }
        rel.push_back(r);
      }
    }
  const Subspace relations = Subspace::span(f, m * m, rel);
  EXPECT_EQ(m * m - relations.dim(), 36u);

  // juxtaposition kills exactly the relations and lands on omega2
  Matrix jux(f, n * n * n, m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) jux.set_column(i * m + j, juxtapose(a, w[i], w[j]));
  EXPECT_EQ(kernel(jux), relations);
  const UniversalForms u = universal_forms(a);
  EXPECT_EQ(u.omega2.dim(), 36u);
  EXPECT_EQ(image(jux, Subspace::full(f, m * m)), u.omega2);
}

TEST(Oracle, CentralRelationOnTruncatedLine) {
  // x dx - dx x = x(1 (x) x - x (x) 1) - (1 (x) x - x (x) 1)x = 2 x (x) x
  const UniversalForms u = universal_forms(catalog::trunc_poly(2));
  const auto w = central_relation_failure(u);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->difference, Vector::from_ints(Field::rationals(), {0, 0, 0, 2}));
}

TEST(Oracle, CeDualityByBimoduleMaps) {
  for (const auto& a : {catalog::trunc_poly(3), catalog::trunc_xy(), catalog::matrix(2), catalog::quaternions(),
                        catalog::upper_triangular(2)}) {
    const CEComplex ce(a, 2);
    const MinimalCalculus mc = minimal_calculus(ce);
    const Subspace homs = brute_bimodule_maps(mc.o1.module, regular_bimodule(a));
    EXPECT_EQ(homs.dim(), brute_derivations(a, false, 0).dim()) << a.name();
    EXPECT_EQ(ce_duality_check(ce, mc).hom_dim, homs.dim()) << a.name();
  }
}

TEST(Oracle, BimoduleMapsMatch) {
  for (const auto& a : ungraded()) {
    const Bimodule reg = regular_bimodule(a);
    EXPECT_EQ(bimodule_maps(HomSpace(reg, reg)), brute_bimodule_maps(reg, reg)) << a.name();
  }
}
