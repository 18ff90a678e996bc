#include "goodwin/estimation.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "goodwin/errors.hpp"

namespace goodwin {
namespace {

constexpr double kLabourForce0 = 100.0;

double mean(std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

std::vector<double> logs(const std::vector<double>& levels, const char* what) {
    std::vector<double> out;
    out.reserve(levels.size());
    for (double x : levels) {
        if (!(x > 0.0)) {
            throw Error(ErrorCode::domain, fmt::format("{} level {} is not positive", what, x));
        }
        out.push_back(std::log(x));
    }
    return out;
}

}  // namespace

void SeriesConfig::validate() const {
    if (!(horizon > 0.0) || !(sampling > 0.0) || sampling > horizon) {
        throw Error(ErrorCode::parameter,
                    fmt::format("need 0 < sampling <= horizon, got sampling {} horizon {}",
                                sampling, horizon));
    }
    if (!(noise_sd >= 0.0) || !std::isfinite(noise_sd)) {
        throw Error(ErrorCode::parameter, fmt::format("noise sd must be >= 0, got {}", noise_sd));
    }
    if (!(integration_step > 0.0)) {
        throw Error(ErrorCode::parameter, "integration step must be positive");
    }
}

SyntheticSeries generate_series(const GoodwinParameters& p, const State& s0,
                                const SeriesConfig& cfg) {
    cfg.validate();
    const auto intervals = static_cast<std::size_t>(std::floor(cfg.horizon / cfg.sampling + 1e-9));
    const auto substeps =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(cfg.sampling / cfg.integration_step - 1e-9)));

    IntegratorConfig icfg;
    icfg.step = cfg.sampling / static_cast<double>(substeps);
    icfg.t_end = cfg.sampling * static_cast<double>(intervals);
    const Trajectory traj = simulate(p, s0, icfg);

    SyntheticSeries out;
    const std::size_t n = intervals + 1;
    for (auto* v : {&out.times, &out.wage_growth, &out.employment, &out.wage_share, &out.wage,
                    &out.productivity, &out.labour_force, &out.output, &out.capital}) {
        v->reserve(n);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t = cfg.sampling * static_cast<double>(i);
        const State& s = traj.states()[i * substeps];
        const double productivity = std::exp(p.alpha * t);
        const double labour = kLabourForce0 * std::exp(p.beta * t);
        const double output = productivity * s.v * labour;
        out.times.push_back(t);
        out.employment.push_back(s.v);
        out.wage_share.push_back(s.u);
        out.wage.push_back(s.u * productivity);
        out.productivity.push_back(productivity);
        out.labour_force.push_back(labour);
        out.output.push_back(output);
        out.capital.push_back(p.sigma * output);
    }
    redraw_noise(out, p, cfg.noise_sd, cfg.seed);
    return out;
}

void redraw_noise(SyntheticSeries& series, const GoodwinParameters& p, double noise_sd,
                  std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 1.0);
    series.wage_growth.resize(series.employment.size());
    for (std::size_t i = 0; i < series.employment.size(); ++i) {
        // d ln w / dt = d ln u / dt + alpha = -gamma + rho v
        double g = -p.gamma + p.rho * series.employment[i];
        if (noise_sd > 0.0) g += noise_sd * noise(rng);
        series.wage_growth[i] = g;
    }
}

LinearFit ols(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::parameter, "regressor and response lengths differ");
    }
    const std::size_t n = x.size();
    if (n < 2) {
        throw Error(ErrorCode::insufficient_data,
                    fmt::format("regression needs at least two observations, got {}", n));
    }
    const double x_bar = mean(x);
    const double y_bar = mean(y);
    double sxx = 0.0;
    double sxy = 0.0;
    double sum_x2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - x_bar;
        sxx += dx * dx;
        sxy += dx * (y[i] - y_bar);
        sum_x2 += x[i] * x[i];
    }
    if (!(sxx > 1e-24 * sum_x2)) {
        throw Error(ErrorCode::singular_design, "regressor is constant; slope is not identified");
    }
    LinearFit fit;
    fit.observations = n;
    fit.slope = sxy / sxx;
    fit.intercept = y_bar - fit.slope * x_bar;
    if (n < 3) {
        fit.se_intercept = fit.se_slope = fit.residual_sd = std::numeric_limits<double>::quiet_NaN();
        return fit;
    }
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - fit.intercept - fit.slope * x[i];
        rss += r * r;
    }
    const double s2 = rss / static_cast<double>(n - 2);
    fit.residual_sd = std::sqrt(s2);
    fit.se_slope = std::sqrt(s2 / sxx);
    fit.se_intercept = std::sqrt(s2 * (1.0 / static_cast<double>(n) + x_bar * x_bar / sxx));
    return fit;
}

PhillipsFit fit_phillips(std::span<const double> employment, std::span<const double> wage_growth) {
    const LinearFit f = ols(employment, wage_growth);
    return {-f.intercept, f.slope, f.se_intercept, f.se_slope, f.observations};
}

PhillipsFit fit_phillips(const SyntheticSeries& series) {
    return fit_phillips(series.employment, series.wage_growth);
}

StructuralFit fit_structural(const SyntheticSeries& series) {
    if (series.size() < 2) {
        throw Error(ErrorCode::insufficient_data, "structural fit needs at least two observations");
    }
    StructuralFit fit;
    fit.alpha = ols(series.times, logs(series.productivity, "productivity")).slope;
    fit.beta = ols(series.times, logs(series.labour_force, "labour force")).slope;
    double ratio_sum = 0.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (!(series.output[i] > 0.0) || !(series.capital[i] > 0.0)) {
            throw Error(ErrorCode::domain, "capital and output levels must be positive");
        }
        ratio_sum += series.capital[i] / series.output[i];
    }
    fit.sigma = ratio_sum / static_cast<double>(series.size());
    return fit;
}

GoodwinParameters fitted_parameters(const StructuralFit& s, const PhillipsFit& ph) noexcept {
    return {s.alpha, s.beta, s.sigma, ph.gamma, ph.rho};
}

CoverageSummary monte_carlo_coverage(const GoodwinParameters& p, const State& s0,
                                     const SeriesConfig& cfg, std::size_t replications,
                                     double k_standard_errors) {
    if (replications == 0) throw Error(ErrorCode::parameter, "need at least one replication");
    SyntheticSeries series = generate_series(p, s0, cfg);

    CoverageSummary out;
    out.replications = replications;
    std::vector<double> gammas;
    std::vector<double> rhos;
    gammas.reserve(replications);
    rhos.reserve(replications);
    std::size_t covered_gamma = 0;
    std::size_t covered_rho = 0;
    for (std::size_t i = 0; i < replications; ++i) {
        redraw_noise(series, p, cfg.noise_sd, cfg.seed + i);
        const PhillipsFit fit = fit_phillips(series);
        if (std::abs(fit.gamma - p.gamma) <= k_standard_errors * fit.se_gamma) ++covered_gamma;
        if (std::abs(fit.rho - p.rho) <= k_standard_errors * fit.se_rho) ++covered_rho;
        gammas.push_back(fit.gamma);
        rhos.push_back(fit.rho);
        out.mean_se_gamma += fit.se_gamma;
        out.mean_se_rho += fit.se_rho;
    }
    const auto r = static_cast<double>(replications);
    const auto sd = [](const std::vector<double>& xs, double m) {
        if (xs.size() < 2) return 0.0;
        double ss = 0.0;
        for (double x : xs) ss += (x - m) * (x - m);
        return std::sqrt(ss / static_cast<double>(xs.size() - 1));
    };
    out.coverage_gamma = static_cast<double>(covered_gamma) / r;
    out.coverage_rho = static_cast<double>(covered_rho) / r;
    out.mean_gamma = mean(gammas);
    out.mean_rho = mean(rhos);
    out.sd_gamma = sd(gammas, out.mean_gamma);
    out.sd_rho = sd(rhos, out.mean_rho);
    out.mean_se_gamma /= r;
    out.mean_se_rho /= r;
    return out;
}

}  // namespace goodwin
