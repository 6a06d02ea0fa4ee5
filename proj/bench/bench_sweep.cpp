// Serial reference kernels against the OpenMP kernels on the default grid.
#include <benchmark/benchmark.h>

#include "modstruve/bounds.hpp"
#include "modstruve/properties.hpp"
#include "modstruve/struve.hpp"

using namespace modstruve;

namespace {

const SweepAxes& default_axes() {
  static const SweepAxes axes = SweepAxes::from(GridSpec{});
  return axes;
}

ExecutionMode mode_of(const benchmark::State& st) {
  return st.range(0) == 0 ? ExecutionMode::serial : ExecutionMode::parallel;
}

void BM_SweepAllCases(benchmark::State& st) {
  const auto mode = mode_of(st);
  long points = 0;
  for (auto _ : st) {
    points = 0;
    for (const auto& c : registry()) {
      auto recs = sweep_case(c, default_axes(), mode);
      points += static_cast<long>(recs.size());
      benchmark::DoNotOptimize(recs.data());
    }
  }
  st.counters["points"] = static_cast<double>(points);
  st.SetLabel(mode == ExecutionMode::serial ? "serial" : "openmp");
}
BENCHMARK(BM_SweepAllCases)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TwoPointSweep(benchmark::State& st) {
  const auto mode = mode_of(st);
  const auto& c = find_case("twopoint_cosh");
  for (auto _ : st) benchmark::DoNotOptimize(sweep_case(c, default_axes(), mode).size());
  st.SetLabel(mode == ExecutionMode::serial ? "serial" : "openmp");
}
BENCHMARK(BM_TwoPointSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PropertySuite(benchmark::State& st) {
  const auto mode = mode_of(st);
  const GridSpec grid;
  for (auto _ : st)
    for (const auto& p : property_catalogue()) benchmark::DoNotOptimize(run_property(p, grid, mode).comparisons);
  st.SetLabel(mode == ExecutionMode::serial ? "serial" : "openmp");
}
BENCHMARK(BM_PropertySuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SeriesEval(benchmark::State& st) {
  const double x = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(struve_l(1.25, x).value);
}
BENCHMARK(BM_SeriesEval)->Arg(1)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
