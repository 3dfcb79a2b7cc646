#include <benchmark/benchmark.h>

#include <random>

#include "endocert/galois.hpp"
#include "endocert/heart.hpp"
#include "endocert/matf.hpp"
#include "endocert/named_groups.hpp"
#include "endocert/verdict.hpp"

using namespace endocert;

namespace {

MatF random_matrix(std::uint32_t ell, std::size_t n, Layout layout) {
  std::mt19937_64 rng(n * 31 + ell);
  MatF m(ell, n, n, layout);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::uint32_t>(rng() % ell));
  return m;
}

void BM_RrefPacked(benchmark::State& st) {
  MatF m = random_matrix(2, st.range(0), Layout::Packed);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefPacked)->Arg(64)->Arg(144)->Arg(512);

void BM_RrefScalarF2(benchmark::State& st) {
  MatF m = random_matrix(2, st.range(0), Layout::Scalar);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefScalarF2)->Arg(64)->Arg(144)->Arg(512);

void BM_RrefF7(benchmark::State& st) {
  MatF m = random_matrix(7, st.range(0), Layout::Auto);
  for (auto _ : st) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefF7)->Arg(64)->Arg(144);

void BM_SchreierSimsM24(benchmark::State& st) {
  PermGroup m24 = groups::mathieu(24);
  for (auto _ : st) {
    PermGroup g(24, m24.generators());
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsM24);

void BM_HeartCentralizer(benchmark::State& st) {
  PermGroup g = st.range(0) == 12 ? groups::mathieu(12) : groups::mathieu(24);
  for (auto _ : st) benchmark::DoNotOptimize(heart_centralizer(g).kind);
}
BENCHMARK(BM_HeartCentralizer)->Arg(12)->Arg(24);

void BM_Census(benchmark::State& st) {
  IntPoly f = IntPoly::parse("x^7 - 7*x + 3");
  for (auto _ : st) benchmark::DoNotOptimize(census(f, st.range(0)).sampled);
}
BENCHMARK(BM_Census)->Arg(100)->Arg(400);

void BM_VerdictPsl27(benchmark::State& st) {
  CaseInput c{groups::gl3_2_on_7(), 0, "PSL2(7)"};
  for (auto _ : st) benchmark::DoNotOptimize(analyze_jacobian(c).outcome);
}
BENCHMARK(BM_VerdictPsl27);

}  // namespace
BENCHMARK_MAIN();
