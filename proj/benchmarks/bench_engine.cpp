#include <benchmark/benchmark.h>

#include "tiltstab/destab.hpp"
#include "tiltstab/reider.hpp"
#include "tiltstab/walls.hpp"

using namespace tiltstab;

static void BM_WallGrid(benchmark::State& state) {
  const std::int64_t hn_max = state.range(0);
  for (auto _ : state) {
    std::size_t circles = 0;
    for (std::int64_t hn = 2; hn <= hn_max; ++hn) {
      const Geometry g = Geometry::make(hn);
      for (std::int64_t d = 0; d <= 10; ++d) {
        const Wall w = wall(standard_class(StandardClass::l_ideal(d), g),
                            standard_class(StandardClass::ideal_dual_shift(d), g), g);
        circles += w.kind == Wall::Kind::Circle;
      }
    }
    benchmark::DoNotOptimize(circles);
  }
  state.SetItemsProcessed(state.iterations() * (hn_max - 1) * 11);
}
BENCHMARK(BM_WallGrid)->Arg(50)->Arg(200);

static void BM_ThaddeusEnumeration(benchmark::State& state) {
  const Geometry g = Geometry::make(state.range(0));
  const NumericalClass target = standard_class(StandardClass::thaddeus(), g);
  const TiltPoint pt = TiltPoint::make(Rational(1, 2), Rational(1, state.range(1)));
  for (auto _ : state) {
    auto cands = enumerate_destabilizers(target, pt, g);
    benchmark::DoNotOptimize(cands);
  }
}
BENCHMARK(BM_ThaddeusEnumeration)->Args({72, 9})->Args({72, 36})->Args({72, 400})->Args({1000, 400});

static void BM_GenericEnumeration(benchmark::State& state) {
  const Geometry g = Geometry::make(10);
  const NumericalClass target = standard_class(StandardClass::line_bundle(1), g);
  const TiltPoint pt = TiltPoint::make(Rational(1, 3), Rational(1, state.range(0)));
  for (auto _ : state) {
    auto cands = enumerate_destabilizers(target, pt, g);
    benchmark::DoNotOptimize(cands);
  }
}
BENCHMARK(BM_GenericEnumeration)->Arg(4)->Arg(64)->Arg(1024);

static void BM_ObstructionCurves(benchmark::State& state) {
  const Geometry g = Geometry::make(state.range(0));
  for (auto _ : state) {
    auto curves = enumerate_obstruction_curves(g, state.range(1));
    benchmark::DoNotOptimize(curves);
  }
}
BENCHMARK(BM_ObstructionCurves)->Args({26, 2})->Args({200, 8})->Args({5000, 40});

static void BM_ReiderBridgeland(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  const Geometry g = Geometry::make((2 * d + 1) * (2 * d + 1) + 1);
  for (auto _ : state) {
    auto verdict = reider_bridgeland(g, d);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_ReiderBridgeland)->Arg(1)->Arg(8)->Arg(32);

static void BM_PicardRankOneVanishing(benchmark::State& state) {
  const Geometry g = Geometry::make(state.range(0));
  for (auto _ : state) {
    auto result = picard_rank_one_vanishing(g, state.range(1));
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_PicardRankOneVanishing)->Args({9, 1})->Args({200, 8});
BENCHMARK_MAIN();
