#include <benchmark/benchmark.h>

#include "goodwin/analysis.hpp"
#include "goodwin/dataset.hpp"
#include "goodwin/estimation.hpp"
#include "goodwin/model.hpp"
#include "goodwin/simulation.hpp"

namespace {

using namespace goodwin;

const CountryRecord& australia() { return builtin_dataset().at("Australia"); }

State means(const CountryRecord& rec) {
    return {rec.value(Column::u_bar), rec.value(Column::v_bar)};
}

void BM_SimulateOnePeriod(benchmark::State& state) {
    const GoodwinParameters p = australia().params_correct();
    IntegratorConfig cfg;
    cfg.method = state.range(0) == 0 ? IntegrationMethod::rk4 : IntegrationMethod::adaptive;
    cfg.t_end = period(p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(p, means(australia()), cfg));
    }
}
BENCHMARK(BM_SimulateOnePeriod)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MeasurePeriod(benchmark::State& state) {
    const GoodwinParameters p = australia().params_correct();
    IntegratorConfig cfg;
    cfg.t_end = 2.5 * period(p);
    const Trajectory traj = simulate(p, means(australia()), cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_period(traj));
    }
}
BENCHMARK(BM_MeasurePeriod)->Unit(benchmark::kMicrosecond);

void BM_ParseDataset(benchmark::State& state) {
    const std::string_view text = builtin_dataset_text();
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_dataset(text));
    }
}
BENCHMARK(BM_ParseDataset);

void BM_RegenerateTable(benchmark::State& state) {
    const Dataset& ds = builtin_dataset();
    for (auto _ : state) {
        benchmark::DoNotOptimize(regenerate_table(ds));
    }
}
BENCHMARK(BM_RegenerateTable);

void BM_FitPhillips(benchmark::State& state) {
    SeriesConfig cfg;
    cfg.noise_sd = 0.005;
    cfg.seed = 1;
    const SyntheticSeries s = generate_series(australia().params_correct(), means(australia()), cfg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_phillips(s));
    }
}
BENCHMARK(BM_FitPhillips);

void BM_MonteCarloCoverage(benchmark::State& state) {
    SeriesConfig cfg;
    cfg.noise_sd = 0.005;
    cfg.seed = 1;
    const auto replications = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            monte_carlo_coverage(australia().params_correct(), means(australia()), cfg, replications));
    }
}
BENCHMARK(BM_MonteCarloCoverage)->Arg(500)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
