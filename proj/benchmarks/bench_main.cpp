#include <benchmark/benchmark.h>

#include "heckecert/analytic.hpp"
#include "heckecert/exactalg.hpp"
#include "heckecert/hecke.hpp"
#include "heckecert/modpfactor.hpp"
#include "heckecert/qseries.hpp"

using namespace heckecert;

namespace {

void BM_SeriesSchoolbook(benchmark::State& state) {
  const auto prec = static_cast<std::size_t>(state.range(0));
  const QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_schoolbook(e4, e6));
}
BENCHMARK(BM_SeriesSchoolbook)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_SeriesKronecker(benchmark::State& state) {
  const auto prec = static_cast<std::size_t>(state.range(0));
  const QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_kronecker(e4, e6));
}
BENCHMARK(BM_SeriesKronecker)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_MillerBasis(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const std::size_t prec = hecke_precision(2, w);
  for (auto _ : state) benchmark::DoNotOptimize(miller_basis(w, prec));
}
BENCHMARK(BM_MillerBasis)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_HeckeCharpoly(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  const IntMatrix m = hecke_matrix(2, w).entries;
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_HeckeCharpoly)->Arg(120)->Arg(240)->Arg(360)->Unit(benchmark::kMillisecond);

void BM_DegreePattern(benchmark::State& state) {
  const IntPoly f = charpoly(hecke_matrix(2, static_cast<int>(state.range(0))).entries);
  const ModPoly g = reduce_mod(f, 1000003);
  for (auto _ : state) benchmark::DoNotOptimize(degree_pattern(g));
}
BENCHMARK(BM_DegreePattern)->Arg(120)->Arg(240)->Unit(benchmark::kMillisecond);

void BM_EvalF(benchmark::State& state) {
  const long D = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(eval_f(6, D, 1, Complex{0.3, 1.1}));
}
BENCHMARK(BM_EvalF)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
