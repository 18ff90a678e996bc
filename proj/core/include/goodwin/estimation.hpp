#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "goodwin/model.hpp"
#include "goodwin/simulation.hpp"

namespace goodwin {

/// Observable series produced by a Goodwin economy. Levels are normalised so
/// that productivity starts at 1 and the labour force at 100.
struct SyntheticSeries {
    std::vector<double> times;        // years
    std::vector<double> wage_growth;  // instantaneous real-wage growth w'/w, plus noise
    std::vector<double> employment;   // v
    std::vector<double> wage_share;   // u
    std::vector<double> wage;         // real wage rate w = u * productivity
    std::vector<double> productivity; // q / l, grows at alpha
    std::vector<double> labour_force; // n, grows at beta
    std::vector<double> output;       // q = productivity * v * n
    std::vector<double> capital;      // k = sigma * q

    std::size_t size() const noexcept { return times.size(); }
};

struct SeriesConfig {
    double horizon = 35.0;           // years
    double sampling = 1.0;           // years between observations
    double noise_sd = 0.0;           // sd of Gaussian noise on wage growth
    std::uint64_t seed = 0;
    double integration_step = 1e-3;  // upper bound; refined so samples land on the grid

    void validate() const;
};

/// Simulates the model from s0 and samples it on an even grid of
/// floor(horizon / sampling) + 1 points. Deterministic for a given seed.
SyntheticSeries generate_series(const GoodwinParameters& p, const State& s0,
                                const SeriesConfig& cfg);

/// Replaces wage_growth with the noiseless Phillips relation plus fresh noise.
/// Used to draw many replications from one simulated path.
void redraw_noise(SyntheticSeries& series, const GoodwinParameters& p, double noise_sd,
                  std::uint64_t seed);

/// Ordinary least squares y = a + b x with classical standard errors.
struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double se_intercept = 0.0;  // NaN with fewer than three observations
    double se_slope = 0.0;
    double residual_sd = 0.0;
    std::size_t observations = 0;
};

/// Throws insufficient_data below two points, singular_design for a constant x.
LinearFit ols(std::span<const double> x, std::span<const double> y);

struct PhillipsFit {
    double gamma = 0.0;  // minus the intercept
    double rho = 0.0;
    double se_gamma = 0.0;
    double se_rho = 0.0;
    std::size_t observations = 0;
};

PhillipsFit fit_phillips(std::span<const double> employment, std::span<const double> wage_growth);
PhillipsFit fit_phillips(const SyntheticSeries& series);

struct StructuralFit {
    double alpha = 0.0;
    double beta = 0.0;
    double sigma = 0.0;
};

/// Log-level trend regressions for alpha and beta, mean capital/output for sigma.
StructuralFit fit_structural(const SyntheticSeries& series);

/// Combines both fits into model parameters.
GoodwinParameters fitted_parameters(const StructuralFit& s, const PhillipsFit& ph) noexcept;

struct CoverageSummary {
    std::size_t replications = 0;
    double coverage_gamma = 0.0;  // fraction with |gamma_hat - gamma| <= k se
    double coverage_rho = 0.0;
    double mean_gamma = 0.0;
    double mean_rho = 0.0;
    double sd_gamma = 0.0;        // across replications
    double sd_rho = 0.0;
    double mean_se_gamma = 0.0;
    double mean_se_rho = 0.0;
};

/// Monte Carlo study on one simulated path: replication i uses seed base_seed + i.
CoverageSummary monte_carlo_coverage(const GoodwinParameters& p, const State& s0,
                                     const SeriesConfig& cfg, std::size_t replications,
                                     double k_standard_errors = 3.0);

}  // namespace goodwin
