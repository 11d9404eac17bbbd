#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "ssg/solitons.hpp"

using namespace ssg;

namespace {

// Shared inputs, built once: a two-soliton pair plus non-singular sample
// points, and a denser point set for the cheap one-soliton kernel.
struct SweepInputs {
  BianchiPair bp;
  FieldFunction soliton;
  std::vector<std::pair<double, double>> pair_pts;
  std::vector<std::pair<double, double>> soliton_pts;

  SweepInputs() {
    const SolitonParams p1{3.0, 0.4, 0.7, 2};
    const SolitonParams p2{1.0, 0.3, -0.5, 3};
    bp = make_bianchi_pair(p1, p2, 4);
    soliton = one_soliton(p1, 4);

    SamplePlan plan;
    plan.count = 200;
    plan.seed = 11;
    plan.margin = 0.05;
    pair_pts = draw_points(Window{}, plan, bp.margin);
    plan.count = 2000;
    soliton_pts = draw_points(Window{}, plan, one_soliton_margin(p1));
  }
};

SweepInputs& inputs() {
  static SweepInputs s;
  return s;
}

void run_pair_sweep(benchmark::State& state, ExecPolicy policy) {
  auto& in = inputs();
  for (auto _ : state) {
    const double worst =
        max_over_indices(in.pair_pts.size(), policy, [&](std::size_t i) {
          return eom_residual(in.bp.phi3, in.pair_pts[i].first,
                              in.pair_pts[i].second)
              .max_abs_value();
        });
    benchmark::DoNotOptimize(worst);
  }
  state.SetItemsProcessed(state.iterations() * int64_t(in.pair_pts.size()));
}

void run_soliton_sweep(benchmark::State& state, ExecPolicy policy) {
  auto& in = inputs();
  for (auto _ : state) {
    const double worst =
        max_over_indices(in.soliton_pts.size(), policy, [&](std::size_t i) {
          return eom_residual(in.soliton, in.soliton_pts[i].first,
                              in.soliton_pts[i].second)
              .max_abs_value();
        });
    benchmark::DoNotOptimize(worst);
  }
  state.SetItemsProcessed(state.iterations() * int64_t(in.soliton_pts.size()));
}

void BM_PairResidualSweepSerial(benchmark::State& state) {
  run_pair_sweep(state, ExecPolicy::Serial);
}
void BM_PairResidualSweepParallel(benchmark::State& state) {
  run_pair_sweep(state, ExecPolicy::Parallel);
}
void BM_SolitonResidualSweepSerial(benchmark::State& state) {
  run_soliton_sweep(state, ExecPolicy::Serial);
}
void BM_SolitonResidualSweepParallel(benchmark::State& state) {
  run_soliton_sweep(state, ExecPolicy::Parallel);
}

BENCHMARK(BM_PairResidualSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairResidualSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolitonResidualSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolitonResidualSweepParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
