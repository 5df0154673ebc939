#include <benchmark/benchmark.h>

#include "qbic/subspace.hpp"
#include "qbic/zeta.hpp"

namespace {

using namespace qbic;

// The hot loop of every Fano count: stream RREF bases and test isotropy.
void BM_IsotropicScan(benchmark::State& state) {
  Field f4(2, 2);
  QBicForm fermat = QBicForm::fermat(f4, 2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    BigInt c = fano_count(fermat, 1, 1);
    benchmark::DoNotOptimize(c);
  }
  state.SetItemsProcessed(
      state.iterations() *
      make_enumeration_plan(f4, fermat.dim(), 2).total.convert_to<std::int64_t>());
}
BENCHMARK(BM_IsotropicScan)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_PointScan(benchmark::State& state) {
  Field f16(2, 4);
  QBicForm fermat = QBicForm::fermat(f16, 2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hypersurface_enumerated_count(fermat, 1));
  }
}
BENCHMARK(BM_PointScan)->Unit(benchmark::kMillisecond);

void BM_FanoZetaAssembly(benchmark::State& state) {
  for (auto _ : state) {
    ZetaFactorization z = fano_zeta(2, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(z.point_count(3));
  }
}
BENCHMARK(BM_FanoZetaAssembly)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace
