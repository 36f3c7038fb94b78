#include <benchmark/benchmark.h>

#include "weyl/branching.hpp"
#include "weyl/catalog.hpp"
#include "weyl/orbits.hpp"
#include "weyl/verify.hpp"

using namespace weyl;

namespace {

Weight make_weight(int rank, std::initializer_list<long long> coords) {
  Weight w(rank, Rat(0));
  int i = 0;
  for (long long c : coords) w[i++] = Rat(c);
  return w;
}

void OrbitGeneric(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ProductAlgebra alg(Simple(Family::B, n));
  Weight w(n, Rat(1));
  for (auto _ : state) {
    Orbit orbit = orbit_points(alg, w);
    benchmark::DoNotOptimize(orbit.points.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(OrbitGeneric)->DenseRange(3, 6)->Complexity();

void OrbitSpinor(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  ProductAlgebra alg(Simple(Family::D, n));
  Weight w(n, Rat(0));
  w[n - 1] = Rat(1);
  for (auto _ : state) {
    Orbit orbit = orbit_points(alg, w);
    benchmark::DoNotOptimize(orbit.points.data());
  }
}
BENCHMARK(OrbitSpinor)->DenseRange(4, 8);

void DominantOf(benchmark::State& state) {
  ProductAlgebra alg(Simple(Family::C, 8));
  Weight w = make_weight(8, {-3, 2, -1, 0, 4, -2, 1, -5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(dominant_of(alg, w));
  }
}
BENCHMARK(DominantOf);

void BranchSpinorC8(benchmark::State& state) {
  const ProjectionMap& map = *Catalog::instance().find("C8>C2");
  Weight w = make_weight(8, {0, 0, 0, 0, 0, 0, 0, 1});
  for (auto _ : state) {
    BranchingResult r = branch(map, w);
    benchmark::DoNotOptimize(r.entries.data());
  }
}
BENCHMARK(BranchSpinorC8);

void VerifyCatalogRank5(benchmark::State& state) {
  for (auto _ : state) {
    VerifyReport report = verify_catalog(5);
    benchmark::DoNotOptimize(report.failures);
  }
}
BENCHMARK(VerifyCatalogRank5);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
