#include <gtest/gtest.h>

#include "ncdiff/errors.hpp"
#include "ncdiff/spec_io.hpp"

using namespace ncdiff;

TEST(SpecIo, AlgebraRoundTrip) {
  for (const auto& a : {catalog::trunc_xy(), catalog::quaternions(), catalog::grassmann(2),
                        catalog::group_algebra(3, Field::prime(5))}) {
    const std::string text = algebra_to_json(a);
    const FiniteAlgebra b = parse_algebra(text);
    EXPECT_EQ(a, b) << a.name();
    EXPECT_EQ(algebra_to_json(b), text);
  }
}

TEST(SpecIo, ModuleRoundTrip) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const Bimodule p = direct_sum(regular_bimodule(t), free_module(t, 1));
  const std::string text = module_to_json(p);
  const Bimodule q = parse_module(text, t);
  EXPECT_EQ(q.dim(), p.dim());
  EXPECT_EQ(q.left_actions(), p.left_actions());
  EXPECT_EQ(q.right_actions(), p.right_actions());
  EXPECT_EQ(module_to_json(q), text);
}

TEST(SpecIo, FieldOverride) {
  const std::string text = algebra_to_json(catalog::trunc_poly(2));
  const FiniteAlgebra a = parse_algebra(text, Field::prime(3));
  EXPECT_EQ(a.field().characteristic(), 3u);
}

TEST(SpecIo, IntegersAndFractions) {
  const FiniteAlgebra a = parse_algebra(
      R"({"name": "k", "char": 0, "dim": 1, "unit": [1], "sc": [[0, 0, 0, "2/2"]]})");
  EXPECT_TRUE(a.validate().ok());
}

TEST(SpecIo, StructuralErrors) {
  EXPECT_THROW(parse_algebra("{"), SpecError);
  EXPECT_THROW(parse_algebra(R"({"name": "k", "dim": 1, "unit": [1], "sc": []})"), SpecError);
  EXPECT_THROW(parse_algebra(R"({"name": "k", "char": 4, "dim": 1, "unit": [1], "sc": []})"), SpecError);
  EXPECT_THROW(parse_algebra(R"({"name": "k", "char": 0, "dim": 1, "unit": [1, 0], "sc": []})"), SpecError);
  EXPECT_THROW(parse_algebra(R"({"name": "k", "char": 0, "dim": 1, "unit": [1], "sc": [[0, 0, 1, 1]]})"),
               SpecError);
  EXPECT_THROW(parse_algebra(R"({"name": "k", "char": 0, "dim": 1, "unit": ["x"], "sc": []})"), SpecError);
  EXPECT_THROW(parse_algebra(R"({"name": "k", "char": 0, "dim": 1, "unit": [1], "sc": [], "parity": [2]})"),
               SpecError);
  EXPECT_THROW(load_algebra("/nonexistent/spec.json"), SpecError);
}

TEST(SpecIo, ModuleMustNameItsAlgebra) {
  const FiniteAlgebra t = catalog::upper_triangular(2);
  const std::string text = module_to_json(regular_bimodule(t));
  EXPECT_THROW(parse_module(text, catalog::matrix(2)), SpecError);
  const std::string short_left = R"j({"algebra": "upper_triangular(2)", "dim": 1, "left": [[5, 0, 0, 1]], "right": []})j";
  EXPECT_THROW(parse_module(short_left, t), SpecError);
}

TEST(SpecIo, AxiomsAreNotCheckedWhileParsing) {
  const FiniteAlgebra a = parse_algebra(
      R"({"name": "bad", "char": 0, "dim": 2, "unit": [1, 0], "sc": [[0, 0, 0, 1], [1, 1, 1, 1]]})");
  EXPECT_FALSE(a.validate().ok());
}
