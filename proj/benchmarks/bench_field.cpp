#include <benchmark/benchmark.h>

#include <random>

#include "qbic/finite_field.hpp"

namespace {

using namespace qbic;

void BM_FieldMul(benchmark::State& state) {
  Field f(2, static_cast<unsigned>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<Fe> xs(4096), ys(4096);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = rng() % f.order();
    ys[i] = rng() % f.order();
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.mul(xs[i & 4095], ys[i & 4095]));
    ++i;
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4)->Arg(12);

void BM_FieldAdd(benchmark::State& state) {
  Field f(2, static_cast<unsigned>(state.range(0)));
  std::mt19937 rng(2);
  std::vector<Fe> xs(4096), ys(4096);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    xs[i] = rng() % f.order();
    ys[i] = rng() % f.order();
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.add(xs[i & 4095], ys[i & 4095]));
    ++i;
  }
}
BENCHMARK(BM_FieldAdd)->Arg(4)->Arg(12);  // table path vs zech path

void BM_FieldConstruction(benchmark::State& state) {
  for (auto _ : state) {
    Field f(2, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(f.order());
  }
}
BENCHMARK(BM_FieldConstruction)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
