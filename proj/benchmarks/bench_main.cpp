#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "jobcost/calibration.hpp"
#include "jobcost/decomposition.hpp"
#include "jobcost/equilibrium.hpp"
#include "jobcost/estimation.hpp"
#include "jobcost/flows.hpp"

using namespace jobcost;

namespace {

MatchingTech tech() {
  static const auto t = calibrate_matching(MonthlyTargets{}, MatchingTech::Family::DenHaanRameyWatson, 0.103);
  return t;
}

void BM_SolveTheta(benchmark::State& state) {
  const auto e = calibrate_economy(MonthlyTargets{}, tech(), default_presets()[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(solve_theta(e.cal, e.tech).theta_star);
}
BENCHMARK(BM_SolveTheta)->DenseRange(0, 3);

void BM_BuildTable(benchmark::State& state) {
  const auto presets = default_presets();
  for (auto _ : state) benchmark::DoNotOptimize(build_table(MonthlyTargets{}, tech(), presets));
}
BENCHMARK(BM_BuildTable)->Unit(benchmark::kMillisecond);

void BM_SweepY(benchmark::State& state) {
  const auto e = calibrate_economy(MonthlyTargets{}, tech(), default_presets()[2]);
  const auto grid = make_grid(0.97, 1.03, 0.001);
  for (auto _ : state) benchmark::DoNotOptimize(sweep_y(e.cal, e.tech, grid));
}
BENCHMARK(BM_SweepY)->Unit(benchmark::kMillisecond);

std::vector<MonthObs> months(std::size_t n) {
  std::vector<MonthObs> out;
  YearMonth d{2000, 12};
  const double l = 1.6e8, vs = 0.037;
  double e = 0.94 * l;
  for (std::size_t i = 0; i < n; ++i, d = d.next()) {
    const double vp = 0.8 + 0.2 * std::sin(0.07 * static_cast<double>(i));
    const double s = probability_from_rate(vs);
    MonthObs m;
    m.date = d;
    m.e_t = e;
    m.l_t = l;
    m.u_t = l - e;
    m.e_next = forward_finding(e, l, vs, vp);
    m.hires = (m.e_next - e * (1 - s)) / -separation_kernel(s);
    out.push_back(m);
    e = m.e_next;
  }
  return out;
}

void BM_AdjustSeries(benchmark::State& state) {
  const auto input = months(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adjust_series(input));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AdjustSeries)->Arg(270)->Arg(1000);

EstimationSample sample(std::size_t n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<YearMonth> dates;
  std::vector<double> f, theta;
  YearMonth d{2000, 12};
  for (std::size_t i = 0; i < n; ++i, d = d.next()) {
    const double th = std::exp(-0.5 + 0.6 * std::sin(0.05 * static_cast<double>(i)) + 0.05 * z(rng));
    dates.push_back(d);
    theta.push_back(th);
    f.push_back(std::exp(6.2 + std::log(th) - std::log1p(std::pow(th, 0.103)) / 0.103 + 0.05 * z(rng)));
  }
  return make_sample(dates, f, theta);
}

void BM_FitNls(benchmark::State& state) {
  const auto s = sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit_nls(s).gamma);
}
BENCHMARK(BM_FitNls)->Arg(270)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
