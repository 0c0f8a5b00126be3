#include <benchmark/benchmark.h>

#include <cmath>

#include "relopt/calibration.hpp"
#include "relopt/closed_form.hpp"
#include "relopt/distributions.hpp"
#include "relopt/monte_carlo.hpp"
#include "relopt/rng.hpp"
#include "relopt/seasonality.hpp"

using namespace relopt;

namespace {

RoContract window_contract(double strike) {
    RoContract c;
    c.t1 = 4.0;
    c.t2 = 7.0;
    c.r = 0.01;
    c.fixed_strike = strike;
    return c;
}

SeasonalityParams bench_seasonality() {
    SeasonalityParams s;
    s.alpha = 3.79;
    for (int m = 2; m <= 12; ++m) s.month[m - 1] = 0.02 * m - 0.15;
    s.day[static_cast<int>(DayCategory::Weekend)] = -0.14;
    for (int h = 2; h <= 24; ++h) s.hour[h - 1] = 0.01 * (h - 12);
    return s;
}

OuParams bench_ou() {
    OuParams p;
    p.lambda = 294.84;
    p.sigma = 6.5932;
    p.seasonality = bench_seasonality();
    return p;
}

} // namespace

static void NormCdf(benchmark::State& state) {
    double x = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_cdf(x));
        x += 1e-5;
        if (x > 6.0) x = -6.0;
    }
}
BENCHMARK(NormCdf);

static void NormInv(benchmark::State& state) {
    double p = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_inv(p));
        p += 1e-7;
        if (p > 1.0 - 1e-6) p = 1e-6;
    }
}
BENCHMARK(NormInv);

static void BsCallMaturity(benchmark::State& state) {
    double t = 4.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bs_call(42.77, 40.0, 0.01, 0.5, t));
        t += 1e-6;
        if (t > 7.0) t = 4.0;
    }
}
BENCHMARK(BsCallMaturity);

static void PriceRoGbmWindow(benchmark::State& state) {
    const GbmParams p{42.77, 0.5, 0.0};
    const RoContract c = window_contract(40.0);
    for (auto _ : state) benchmark::DoNotOptimize(price_ro_gbm(p, c).value);
}
BENCHMARK(PriceRoGbmWindow);

static void PriceRoSeasonalOuWindow(benchmark::State& state) {
    const OuParams p = bench_ou();
    const RoContract c = window_contract(40.0);
    for (auto _ : state) benchmark::DoNotOptimize(price_ro_ou(p, c).value);
}
BENCHMARK(PriceRoSeasonalOuWindow)->Unit(benchmark::kMillisecond);

static void McPriceSeasonalOu(benchmark::State& state) {
    const ModelSpec m{bench_ou()};
    const RoContract c = window_contract(40.0);
    McConfig cfg;
    cfg.n_paths = static_cast<std::size_t>(state.range(0));
    cfg.steps_per_year = 8760;
    cfg.seed = 2;
    for (auto _ : state) benchmark::DoNotOptimize(mc_price(m, c, cfg, 2).value);
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(McPriceSeasonalOu)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

static void FitSeasonalityYear(benchmark::State& state) {
    const SeasonalityParams truth = bench_seasonality();
    PriceSeries series;
    const CivilDateTime start{2016, 1, 1, 0};
    std::uint64_t k = 0;
    for (int i = 0; i < 8784; ++i) {
        const CivilDateTime ts = add_hours(start, i);
        series.timestamps.push_back(ts);
        const double noise = 0.2 * (counter_uniform(42, k++) - 0.5);
        series.prices.push_back(std::exp(seasonal_value(truth, ts) + noise));
    }
    for (auto _ : state) benchmark::DoNotOptimize(fit_seasonality(series).r_squared);
    state.SetItemsProcessed(state.iterations() * series.size());
}
BENCHMARK(FitSeasonalityYear)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
