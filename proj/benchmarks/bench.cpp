#include <benchmark/benchmark.h>

#include "ncwit/moments.hpp"
#include "ncwit/states.hpp"
#include "ncwit/sweep.hpp"
#include "ncwit/witnesses.hpp"

namespace {

using namespace ncwit;

const double kPi = 3.141592653589793;

void BM_CatConstruction(benchmark::State& state) {
  const CatParams p{1.5, kPi};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cat_fock(p));
  }
}
BENCHMARK(BM_CatConstruction);

void BM_SqueezedConstruction(benchmark::State& state) {
  const SqueezedParams p{0.8, 0.4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(squeezed_vacuum_fock(p));
  }
}
BENCHMARK(BM_SqueezedConstruction);

void BM_AnalyticMomentTable(benchmark::State& state) {
  const CatParams p{1.2, kPi};
  for (auto _ : state) {
    const auto m = cat_moments(p);
    cplx acc{0.0, 0.0};
    for (int k = 0; k <= 5; ++k) {
      for (int l = 0; l <= 5; ++l) acc += m->moment(k, l);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_AnalyticMomentTable);

void BM_FockMomentTable(benchmark::State& state) {
  const FockVector s = squeezed_vacuum_fock({0.8, 0.0});
  for (auto _ : state) {
    cplx acc{0.0, 0.0};
    for (int k = 0; k <= 5; ++k) {
      for (int l = 0; l <= 5; ++l) acc += moment(s, k, l);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FockMomentTable);

void BM_Antibunching(benchmark::State& state) {
  for (auto _ : state) {
    const auto m = cat_moments({1.0, kPi});
    benchmark::DoNotOptimize(hoa(*m, 3).value);
  }
}
BENCHMARK(BM_Antibunching);

void BM_SubPoissonian(benchmark::State& state) {
  for (auto _ : state) {
    const auto m = cat_moments({1.0, kPi});
    benchmark::DoNotOptimize(hosps(*m, 4).value);
  }
}
BENCHMARK(BM_SubPoissonian);

void BM_HongMandel(benchmark::State& state) {
  for (auto _ : state) {
    const auto m = squeezed_moments({0.5, 0.0});
    benchmark::DoNotOptimize(hong_mandel(*m, 6, kPi / 2.0).value);
  }
}
BENCHMARK(BM_HongMandel);

void BM_FourthMomentPair(benchmark::State& state) {
  const FockVector s = apply_non_gaussian(cat_fock({1.5, 0.0}), {1, 0});
  for (auto _ : state) {
    const auto m = fock_moments(s);
    benchmark::DoNotOptimize(hillery2(*m).first.value);
  }
}
BENCHMARK(BM_FourthMomentPair);

void BM_SweepPoint(benchmark::State& state) {
  SweepSpec spec;
  spec.family = StateFamily::Squeezed;
  spec.param = "xi";
  spec.start = 0.5;
  spec.stop = 0.5;
  spec.step = 0.1;
  spec.witness = "hillery2";
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec, 1).rows[0].value);
  }
}
BENCHMARK(BM_SweepPoint);

}  // namespace

BENCHMARK_MAIN();
