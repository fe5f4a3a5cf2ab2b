#include <benchmark/benchmark.h>

#include <random>

#include "kindex/ahss/cw_complex.hpp"
#include "kindex/ahss/spectral.hpp"
#include "kindex/circleop/laurent.hpp"
#include "kindex/circleop/winding.hpp"
#include "kindex/cohomring/space.hpp"
#include "kindex/exactalg/int_matrix.hpp"
#include "kindex/exactalg/power_series.hpp"
#include "kindex/indexthm/index.hpp"
#include "kindex/repring/group.hpp"
#include "kindex/repring/rep.hpp"

namespace {

using namespace kindex;

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = d(rng);
  }
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_ToddSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(todd_series(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ToddSeries)->Arg(8)->Arg(16)->Arg(32);

void BM_Winding(benchmark::State& state) {
  const LaurentPoly q = parse_laurent(state.range(0) == 0 ? "z^3 - 1/2 z + 1/5 z^-2" : "z - 1001/1000");
  for (auto _ : state) benchmark::DoNotOptimize(winding_number(q));
}
BENCHMARK(BM_Winding)->Arg(0)->Arg(1);

void BM_DolbeaultIndex(benchmark::State& state) {
  const Space s = builtin_space("cp", state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dolbeault_index(s));
}
BENCHMARK(BM_DolbeaultIndex)->Arg(2)->Arg(3)->Arg(4);

void BM_AhssRealProjective(benchmark::State& state) {
  const CWComplex x = builtin_cw("rp", state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ahss_run(x));
}
BENCHMARK(BM_AhssRealProjective)->Arg(4)->Arg(8)->Arg(16);

void BM_Frobenius(benchmark::State& state) {
  const SubgroupEmbedding e = builtin_embedding("z2_in_z4");
  for (auto _ : state) benchmark::DoNotOptimize(check_frobenius(e));
}
BENCHMARK(BM_Frobenius);

}  // namespace

BENCHMARK_MAIN();
