// Serial vs OpenMP refuter restarts on a hinged configuration.

#include <benchmark/benchmark.h>

#include "udrig/config_io.hpp"
#include "udrig/refuter.hpp"

namespace {

udrig::kernel::Problem hinge_problem() {
  static const char* text = R"J({"dimension": 2,
    "points": [{"label": "X", "coords": ["0", "0"]},
               {"label": "M", "coords": ["1", "0"]},
               {"label": "A", "coords": ["1/2", "1/2*sqrt(3)"]},
               {"label": "B", "coords": ["3/2", "1/2*sqrt(3)"]},
               {"label": "Y", "coords": ["2", "sqrt(3)"]}],
    "unit_edges": [["X", "M"], ["X", "A"], ["A", "M"], ["M", "B"], ["A", "B"], ["B", "Y"]]})J";
  udrig::Configuration c = udrig::parse_configuration(text);
  return udrig::kernel::make_problem(c, udrig::DistanceClaim{"X", "Y", udrig::Mode::Strong});
}

void BM_RestartsSerial(benchmark::State& state) {
  auto p = hinge_problem();
  udrig::RefuterParams params;
  params.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udrig::kernel::search_serial(p, params));
}

void BM_RestartsParallel(benchmark::State& state) {
  auto p = hinge_problem();
  udrig::RefuterParams params;
  params.restarts = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(udrig::kernel::search_parallel(p, params));
}

}  // namespace

BENCHMARK(BM_RestartsSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RestartsParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
