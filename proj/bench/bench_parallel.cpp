// Serial reference vs OpenMP kernels: subgroup lattices and Goursat
// enumeration. Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <memory>

#include "compositum/goursat.hpp"
#include "compositum/named_groups.hpp"
#include "compositum/subgroups.hpp"

namespace {

using namespace compositum;
using namespace compositum::named;

PermGroup pick(int id) {
  switch (id) {
    case 0: return symmetric(4);
    case 1: return direct_product(dihedral(4), cyclic(2));
    default: return direct_product(symmetric(3), symmetric(3));
  }
}

void BM_Lattice(benchmark::State& state, Execution exec) {
  const PermGroup g = pick(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SubgroupLattice lat(g, {}, exec);
    benchmark::DoNotOptimize(lat.size());
  }
  state.SetLabel("|G| = " + std::to_string(g.order()));
}

void BM_Goursat(benchmark::State& state, Execution exec) {
  const PermGroup a = pick(static_cast<int>(state.range(0)));
  const PermGroup b = dihedral(4);
  const ProductGroup ab(a, b);
  const auto la = std::make_shared<const SubgroupLattice>(a);
  const auto lb = std::make_shared<const SubgroupLattice>(b);
  const GoursatEnumerator en(ab, la, lb);
  for (auto _ : state) {
    auto subs = en.subgroups({}, exec);
    benchmark::DoNotOptimize(subs.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Lattice, serial, Execution::Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Lattice, parallel, Execution::Parallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Goursat, serial, Execution::Serial)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Goursat, parallel, Execution::Parallel)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
