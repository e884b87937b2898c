// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "lawson/bipolar_analysis.hpp"
#include "lawson/kernels.hpp"
#include "lawson/report.hpp"

using namespace lawson;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void BM_CoincidenceScan(benchmark::State& state) {
  const auto cfg = LatticeConfig::make(8, 7);
  const auto g = family_group(Family::Eta, cfg);
  const auto poly = eta_polygon(cfg);
  const auto polar = polar_vertex_data(Family::Eta, cfg);
  // Repeat the group so the scan is long enough to amortize thread start-up.
  std::vector<Matrix4> maps;
  std::vector<int> signs;
  for (int rep = 0; rep < 64; ++rep)
    for (const auto& e : g.elements()) {
      maps.push_back(e.matrix);
      signs.push_back(rep % 2 ? -1 : 1);
    }
  const Bivector6 target = wedge(poly.vertex(1), polar.normals[1]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coincidence_scan(maps, signs, poly.vertex(1), polar.normals[1], target, exec_of(state)));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * maps.size()));
}

void BM_PolygonSymmetryScan(benchmark::State& state) {
  const auto cfg = LatticeConfig::make(8, 7);
  const auto g = family_group(Family::Eta, cfg);
  const auto poly = eta_polygon(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(polygon_symmetry_scan(g, poly, exec_of(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * g.size()));
}

void BM_VerifiedGrid(benchmark::State& state) {
  RunFlags flags;
  flags.verify = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_batch(Family::Eta, {2, 8}, {2, 8}, flags, exec_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_CoincidenceScan)->ArgName("parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_PolygonSymmetryScan)->ArgName("parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_VerifiedGrid)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
