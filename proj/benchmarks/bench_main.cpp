#include <benchmark/benchmark.h>

#include "ncdiff/ce.hpp"
#include "ncdiff/derivations.hpp"
#include "ncdiff/diffops.hpp"
#include "ncdiff/graded_ce.hpp"
#include "ncdiff/jets.hpp"
#include "ncdiff/linalg.hpp"
#include "ncdiff/universal.hpp"

using namespace ncdiff;

namespace {

Matrix hilbert_like(std::size_t n) {
  Matrix m(Field::rationals(), n, n + 3);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n + 3; ++c) m.set(r, c, mpq_class(1, r + c + 1));
  return m;
}

void BM_Rref(benchmark::State& st) {
  const Matrix m = hilbert_like(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_Derivations(benchmark::State& st) {
  const FiniteAlgebra a = st.range(0) == 0 ? catalog::matrix(2) : catalog::grassmann(2);
  for (auto _ : st) benchmark::DoNotOptimize(derivations(a, a.is_graded()).dim());
}
BENCHMARK(BM_Derivations)->Arg(0)->Arg(1);

void BM_Grothendieck(benchmark::State& st) {
  const Bimodule reg = regular_bimodule(catalog::trunc_poly(4));
  const HomSpace h(reg, reg);
  for (auto _ : st) benchmark::DoNotOptimize(grothendieck_chain(h, 3).terms.size());
}
BENCHMARK(BM_Grothendieck);

void BM_Lunts(benchmark::State& st) {
  const Bimodule reg = regular_bimodule(st.range(0) == 0 ? catalog::matrix(2) : catalog::trunc_poly(4));
  const HomSpace h(reg, reg);
  for (auto _ : st) benchmark::DoNotOptimize(lunts_filtration(h, 3, Side::left).terms.size());
}
BENCHMARK(BM_Lunts)->Arg(0)->Arg(1);

void BM_CE(benchmark::State& st) {
  const FiniteAlgebra a = catalog::matrix(2);
  const auto k = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(CEComplex(a, k).forms(k).dim());
}
BENCHMARK(BM_CE)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_GradedCE(benchmark::State& st) {
  const FiniteAlgebra a = catalog::grassmann(2);
  const auto k = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(GradedCEComplex(a, k).cochain_dim(k));
}
BENCHMARK(BM_GradedCE)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Universal(benchmark::State& st) {
  const FiniteAlgebra a = catalog::matrix(2);
  for (auto _ : st) benchmark::DoNotOptimize(universal_forms(a).omega2.dim());
}
BENCHMARK(BM_Universal)->Unit(benchmark::kMillisecond);

void BM_Jets(benchmark::State& st) {
  const Bimodule reg = regular_bimodule(catalog::trunc_xy());
  const auto k = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(representability(jet_module(reg, k), reg).ok());
}
BENCHMARK(BM_Jets)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
