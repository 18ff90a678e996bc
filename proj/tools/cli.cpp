#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "goodwin/analysis.hpp"
#include "goodwin/dataset.hpp"
#include "goodwin/errors.hpp"
#include "goodwin/estimation.hpp"
#include "goodwin/model.hpp"
#include "goodwin/simulation.hpp"
#include "output.hpp"

namespace goodwin::cli {
namespace {

struct OutputFlags {
    std::string format = "table";
    std::string out;
    int decimals = -1;

    void attach(CLI::App* app) {
        app->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "csv", "markdown"}));
        app->add_option("--out", out, "Write the report to this file instead of standard output");
        app->add_option("--decimals", decimals, "Decimal places for value columns")
            ->check(CLI::NonNegativeNumber);
    }

    OutputSpec spec() const {
        OutputSpec s;
        s.format = *parse_format(format);
        s.destination = out;
        if (decimals >= 0) s.decimals = decimals;
        return s;
    }
};

std::string fixed(double x, int decimals) {
    return fmt::format("{:.{}f}", x + 0.0, decimals);  // + 0.0 folds -0 into 0
}

std::string fixed(const std::optional<double>& x, int decimals) {
    return x ? fixed(*x, decimals) : std::string{};
}

/// Runs `body` against the requested destination; notes go to the report for
/// human formats and to stderr for machine-readable CSV.
int emit(const OutputSpec& spec, std::ostream& out, std::ostream& err,
         const std::function<int(std::ostream& report, std::ostream& notes)>& body) {
    if (spec.destination.empty()) {
        return body(out, spec.format == Format::csv ? err : out);
    }
    std::ofstream file(spec.destination, std::ios::binary);
    if (!file) throw Error(ErrorCode::usage, "cannot open output file '" + spec.destination + "'");
    return body(file, spec.format == Format::csv ? err : file);
}

const Dataset& dataset_from(const std::string& path, std::optional<Dataset>& storage) {
    if (path.empty()) return builtin_dataset();
    storage = load_dataset(path);
    return *storage;
}

std::optional<Scale> parse_scale(const std::string& which) {
    if (which == "harvie") return Scale::harvie;
    if (which == "corrected") return Scale::corrected;
    return std::nullopt;
}

std::string quantity_name(Column c) {
    switch (c) {
        case Column::u_star_harvie:
        case Column::u_star_correct: return "u_star";
        case Column::v_star_harvie:
        case Column::v_star_correct: return "v_star";
        case Column::T_harvie:
        case Column::T_correct: return "T";
        default: return std::string(column_name(c));
    }
}

// ---------------------------------------------------------------- reproduce

struct ReproduceFlags {
    std::string dataset;
    std::string which;
    OutputFlags output;
};

int cmd_reproduce(const ReproduceFlags& flags, std::ostream& out, std::ostream& err) {
    std::optional<Dataset> storage;
    const Dataset& ds = dataset_from(flags.dataset, storage);
    const RegeneratedTable regenerated = regenerate_table(ds);
    const std::optional<Scale> only = parse_scale(flags.which);
    const OutputSpec spec = flags.output.spec();

    return emit(spec, out, err, [&](std::ostream& report, std::ostream& notes) {
        TextTable table({"country", "quantity", "scale", "computed", "printed", "deviation", "status"},
                        {false, false, false, true, true, true, false});
        std::size_t matched = 0, documented = 0, mismatched = 0, unprinted = 0;
        std::vector<std::string> warnings;
        std::vector<std::string> failures;
        for (const auto& cell : regenerated.cells) {
            if (only && cell.scale != *only) continue;
            const int printed_decimals = cell.printed ? cell.printed->decimals : 2;
            table.add_row({cell.country, quantity_name(cell.column), to_string(cell.scale),
                           fixed(cell.computed, spec.decimals_or(4)),
                           cell.printed ? cell.printed->text : std::string{},
                           fixed(cell.deviation, spec.decimals_or(printed_decimals)),
                           to_string(cell.status)});
            const std::string where =
                fmt::format("{} {} ({}): computed {} vs printed {}", cell.country,
                            quantity_name(cell.column), to_string(cell.scale),
                            cell.computed ? fixed(*cell.computed, 4) : "n/a",
                            cell.printed ? cell.printed->text : "blank");
            switch (cell.status) {
                case CellStatus::match: ++matched; break;
                case CellStatus::documented_discrepancy:
                    ++documented;
                    warnings.push_back(where + "; " + cell.note);
                    break;
                case CellStatus::mismatch:
                    ++mismatched;
                    failures.push_back(where + (cell.note.empty() ? "" : "; " + cell.note));
                    break;
                case CellStatus::not_printed: ++unprinted; break;
                case CellStatus::blank: break;
            }
        }
        table.render(report, spec.format);
        for (const auto& w : warnings) err << "warning: " << w << '\n';
        for (const auto& f : failures) err << "mismatch: " << f << '\n';
        notes << fmt::format(
            "summary: {} match, {} documented discrepancies, {} mismatches, {} computed but not "
            "printed\n",
            matched, documented, mismatched, unprinted);
        return mismatched == 0 ? kOk : kFailure;
    });
}

// ----------------------------------------------------------------- simulate

struct SimulateFlags {
    std::string country;
    std::string which = "corrected";
    std::string dataset;
    std::optional<double> alpha, beta, sigma, gamma, rho;
    std::optional<double> u0, v0;
    bool from_means = false;
    bool at_equilibrium = false;
    double step = 1e-3;
    std::optional<double> t_end;
    std::string method = "rk4";
    double drift_tolerance = 1e-6;
    std::string out;
};

int cmd_simulate(const SimulateFlags& flags, std::ostream& out, std::ostream& err) {
    std::optional<Dataset> storage;
    const CountryRecord* record = nullptr;
    GoodwinParameters p;
    if (!flags.country.empty()) {
        record = &dataset_from(flags.dataset, storage).at(flags.country);
        p = parse_scale(flags.which) == Scale::harvie ? record->params_harvie()
                                                      : record->params_correct();
    } else if (!(flags.alpha && flags.beta && flags.sigma && flags.gamma && flags.rho)) {
        throw Error(ErrorCode::usage,
                    "give --country or all of --alpha --beta --sigma --gamma --rho");
    }
    if (flags.alpha) p.alpha = *flags.alpha;
    if (flags.beta) p.beta = *flags.beta;
    if (flags.sigma) p.sigma = *flags.sigma;
    if (flags.gamma) p.gamma = *flags.gamma;
    if (flags.rho) p.rho = *flags.rho;
    p.validate();

    const int chosen = int(flags.from_means) + int(flags.at_equilibrium) + int(flags.u0 || flags.v0);
    if (chosen > 1) {
        throw Error(ErrorCode::usage,
                    "choose one initial condition: --from-means, --at-equilibrium or --u0/--v0");
    }
    State s0;
    if (flags.at_equilibrium) {
        s0 = equilibrium(p).state();
    } else if (flags.u0 || flags.v0) {
        if (!(flags.u0 && flags.v0)) throw Error(ErrorCode::usage, "--u0 and --v0 go together");
        s0 = {*flags.u0, *flags.v0};
    } else if (record) {
        s0 = {record->value(Column::u_bar), record->value(Column::v_bar)};
    } else {
        throw Error(ErrorCode::usage, "explicit parameters need --u0/--v0 or --at-equilibrium");
    }

    IntegratorConfig cfg;
    cfg.step = flags.step;
    cfg.drift_tolerance = flags.drift_tolerance;
    cfg.method = flags.method == "adaptive" ? IntegrationMethod::adaptive : IntegrationMethod::rk4;
    std::optional<double> linear_period;
    try {
        linear_period = period(p);
    } catch (const Error&) {
    }
    // Two and a half linearized periods give at least two section crossings.
    cfg.t_end = flags.t_end.value_or(linear_period ? 2.5 * *linear_period : 30.0);

    const Trajectory traj = simulate(p, s0, cfg);
    std::optional<double> measured;
    try {
        measured = measure_period(traj);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::insufficient_data && e.code() != ErrorCode::equilibrium_undefined)
            throw;
    }

    const auto write = [&](std::ostream& os) {
        os << "t,u,v,H\n";
        for (std::size_t i = 0; i < traj.size(); ++i) {
            os << fmt::format("{:.12g},{:.12g},{:.12g},{:.12g}\n", traj.times()[i],
                              traj.states()[i].u, traj.states()[i].v, traj.h_values()[i]);
        }
    };
    std::ostream* summary = &err;
    std::ofstream file;
    if (flags.out.empty()) {
        write(out);
    } else {
        file.open(flags.out, std::ios::binary);
        if (!file) throw Error(ErrorCode::usage, "cannot open output file '" + flags.out + "'");
        write(file);
        summary = &out;
    }
    *summary << fmt::format("summary: steps={} t_end={} T_measured={} T_linear={} max_drift={:.3e}\n",
                            traj.size() - 1, cfg.t_end,
                            measured ? fmt::format("{:.4f}", *measured) : "n/a",
                            linear_period ? fmt::format("{:.4f}", *linear_period) : "n/a",
                            traj.max_drift());
    return kOk;
}

// ------------------------------------------------------------------- errors

struct ErrorsFlags {
    std::string which = "corrected";
    bool include_us = false;
    std::string dataset;
    OutputFlags output;
};

int cmd_errors(const ErrorsFlags& flags, std::ostream& out, std::ostream& err) {
    std::optional<Dataset> storage;
    const Dataset& ds = dataset_from(flags.dataset, storage);
    const Scale which = *parse_scale(flags.which);
    const ErrorReport report = error_report(ds, which, flags.include_us);
    const PublishedAverage published = published_average(which, flags.include_us);
    const OutputSpec spec = flags.output.spec();
    const Column column = which == Scale::harvie ? Column::v_star_harvie : Column::v_star_correct;
    const int pct_decimals = spec.decimals_or(2);

    return emit(spec, out, err, [&](std::ostream& os, std::ostream& notes) {
        TextTable table({"country", "v_star", "v_bar", "relative_error_pct"},
                        {false, true, true, true});
        for (const auto& name : report.included) {
            const CountryRecord& rec = ds.at(name);
            table.add_row({name, rec.cell(column)->text, rec.cell(Column::v_bar)->text,
                           fixed(100.0 * report.per_country.at(name), pct_decimals)});
        }
        table.add_row({"average", "", "", fixed(100.0 * report.average, pct_decimals)});
        table.render(os, spec.format);

        const double avg_pct = 100.0 * report.average;
        const bool within = std::abs(avg_pct - published.percent) <= published.tolerance_pp;
        notes << fmt::format("average: {:.2f}% over {} countries ({} v_star); published {:.2f}% "
                             "+/- {:.2f}pp: {}\n",
                             avg_pct, report.included.size(), to_string(which), published.percent,
                             published.tolerance_pp, within ? "within tolerance" : "OUT OF TOLERANCE");
        if (which == Scale::corrected) {
            notes << "note: errors use the two-decimal printed v_star; the published averages were "
                     "likely computed from unrounded estimates, hence the tolerance\n";
        }
        if (flags.include_us) {
            notes << "note: the US enters with its printed v_star 0.86, which the printed US "
                     "coefficients do not reproduce (they give 0.923)\n";
        }
        return kOk;
    });
}

// ----------------------------------------------------------------- estimate

struct EstimateFlags {
    std::string country;
    std::string dataset;
    std::uint64_t seed = 1;
    double noise = 0.0;
    std::size_t replications = 1;
    double horizon = 35.0;
    double sampling = 1.0;
    OutputFlags output;
};

int cmd_estimate(const EstimateFlags& flags, std::ostream& out, std::ostream& err) {
    std::optional<Dataset> storage;
    const CountryRecord& rec = dataset_from(flags.dataset, storage).at(flags.country);
    const GoodwinParameters truth = rec.params_correct();
    const State s0{rec.value(Column::u_bar), rec.value(Column::v_bar)};

    SeriesConfig cfg;
    cfg.horizon = flags.horizon;
    cfg.sampling = flags.sampling;
    cfg.noise_sd = flags.noise;
    cfg.seed = flags.seed;
    const SyntheticSeries series = generate_series(truth, s0, cfg);
    const PhillipsFit phillips = fit_phillips(series);
    const StructuralFit structural = fit_structural(series);
    const GoodwinParameters fitted = fitted_parameters(structural, phillips);

    const OutputSpec spec = flags.output.spec();
    const int d = spec.decimals_or(6);
    return emit(spec, out, err, [&](std::ostream& os, std::ostream& notes) {
        TextTable table({"quantity", "true", "estimate", "std_error", "rel_error_pct"},
                        {false, true, true, true, true});
        const auto row = [&](const char* name, double t, double e, std::optional<double> se) {
            const double rel = t != 0.0 ? 100.0 * std::abs(e - t) / std::abs(t) : std::abs(e) * 100.0;
            table.add_row({name, fixed(t, d), fixed(e, d),
                           se && std::isfinite(*se) ? fixed(*se, d) : std::string{},
                           fixed(rel, 4)});
        };
        row("alpha", truth.alpha, fitted.alpha, std::nullopt);
        row("beta", truth.beta, fitted.beta, std::nullopt);
        row("sigma", truth.sigma, fitted.sigma, std::nullopt);
        row("gamma", truth.gamma, fitted.gamma, phillips.se_gamma);
        row("rho", truth.rho, fitted.rho, phillips.se_rho);
        const EquilibriumPoint eq_true = equilibrium(truth);
        const EquilibriumPoint eq_fit = equilibrium(fitted);
        row("u_star", eq_true.u_star, eq_fit.u_star, std::nullopt);
        row("v_star", eq_true.v_star, eq_fit.v_star, std::nullopt);
        table.render(os, spec.format);
        notes << fmt::format("series: {} observations, horizon {} years, sampling {} years, "
                             "noise sd {}, seed {}\n",
                             series.size(), flags.horizon, flags.sampling, flags.noise, flags.seed);

        if (flags.replications > 1) {
            const CoverageSummary mc =
                monte_carlo_coverage(truth, s0, cfg, flags.replications, 3.0);
            if (spec.format != Format::csv) os << '\n';
            TextTable cov({"parameter", "true", "mean_estimate", "sd_estimate", "mean_std_error",
                           "coverage_3se"},
                          {false, true, true, true, true, true});
            cov.add_row({"gamma", fixed(truth.gamma, d), fixed(mc.mean_gamma, d),
                         fixed(mc.sd_gamma, d), fixed(mc.mean_se_gamma, d),
                         fixed(mc.coverage_gamma, 4)});
            cov.add_row({"rho", fixed(truth.rho, d), fixed(mc.mean_rho, d), fixed(mc.sd_rho, d),
                         fixed(mc.mean_se_rho, d), fixed(mc.coverage_rho, 4)});
            cov.render(os, spec.format);
            notes << fmt::format("monte carlo: {} replications, seeds {}..{}\n", mc.replications,
                                 flags.seed, flags.seed + flags.replications - 1);
        }
        return kOk;
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Goodwin growth-cycle model: corrected table reproduction, simulation and "
                 "estimation",
                 "goodwin"};
    app.require_subcommand(1);

    ReproduceFlags reproduce_flags;
    auto* reproduce = app.add_subcommand("reproduce", "Recompute the corrected table and compare "
                                                      "every cell with its printed value");
    reproduce->add_option("--dataset", reproduce_flags.dataset,
                          "Table file (default: the compiled-in table)");
    reproduce->add_option("--which", reproduce_flags.which, "Restrict to one coefficient scale")
        ->check(CLI::IsMember({"harvie", "corrected"}));
    reproduce_flags.output.attach(reproduce);

    SimulateFlags sim_flags;
    auto* simulate_cmd = app.add_subcommand("simulate", "Integrate the model and write a trajectory");
    simulate_cmd->add_option("--country", sim_flags.country, "Take parameters from this table row");
    simulate_cmd->add_option("--which", sim_flags.which, "Coefficient scale for --country")
        ->check(CLI::IsMember({"harvie", "corrected"}));
    simulate_cmd->add_option("--dataset", sim_flags.dataset, "Table file");
    simulate_cmd->add_option("--alpha", sim_flags.alpha, "Productivity growth rate");
    simulate_cmd->add_option("--beta", sim_flags.beta, "Labour-force growth rate");
    simulate_cmd->add_option("--sigma", sim_flags.sigma, "Capital-to-output ratio");
    simulate_cmd->add_option("--gamma", sim_flags.gamma, "Phillips-curve intercept magnitude");
    simulate_cmd->add_option("--rho", sim_flags.rho, "Phillips-curve slope");
    simulate_cmd->add_option("--u0", sim_flags.u0, "Initial wage share");
    simulate_cmd->add_option("--v0", sim_flags.v0, "Initial employment rate");
    simulate_cmd->add_flag("--from-means", sim_flags.from_means,
                           "Start at the country's empirical averages (default with --country)");
    simulate_cmd->add_flag("--at-equilibrium", sim_flags.at_equilibrium, "Start at the equilibrium");
    simulate_cmd->add_option("--step", sim_flags.step, "Integration step in years")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--t-end", sim_flags.t_end,
                             "Horizon in years (default: 2.5 linearized periods, or 30)")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--method", sim_flags.method, "Integrator")
        ->check(CLI::IsMember({"rk4", "adaptive"}));
    simulate_cmd->add_option("--drift-tol", sim_flags.drift_tolerance,
                             "Abort when |H(t) - H(0)| exceeds this")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--out", sim_flags.out, "Trajectory file (default: standard output)");

    ErrorsFlags errors_flags;
    auto* errors_cmd =
        app.add_subcommand("errors", "Relative error of equilibrium employment against averages");
    errors_cmd->add_option("--which", errors_flags.which, "Printed v_star column to assess")
        ->check(CLI::IsMember({"harvie", "corrected"}));
    errors_cmd->add_flag("--include-us", errors_flags.include_us, "Include the United States");
    errors_cmd->add_option("--dataset", errors_flags.dataset, "Table file");
    errors_flags.output.attach(errors_cmd);

    EstimateFlags est_flags;
    auto* estimate_cmd = app.add_subcommand(
        "estimate", "Recover parameters from a simulated economy by least squares");
    estimate_cmd->add_option("--country", est_flags.country, "Generating table row")->required();
    estimate_cmd->add_option("--dataset", est_flags.dataset, "Table file");
    estimate_cmd->add_option("--seed", est_flags.seed, "Noise seed");
    estimate_cmd->add_option("--noise", est_flags.noise, "Standard deviation of wage-growth noise")
        ->check(CLI::NonNegativeNumber);
    estimate_cmd->add_option("--replications", est_flags.replications,
                             "Monte Carlo replications (seeds seed, seed+1, ...)")
        ->check(CLI::PositiveNumber);
    estimate_cmd->add_option("--horizon", est_flags.horizon, "Series length in years")
        ->check(CLI::PositiveNumber);
    estimate_cmd->add_option("--sampling", est_flags.sampling, "Years between observations")
        ->check(CLI::PositiveNumber);
    est_flags.output.attach(estimate_cmd);

    std::vector<const char*> argv{"goodwin"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*reproduce) return cmd_reproduce(reproduce_flags, out, err);
        if (*simulate_cmd) return cmd_simulate(sim_flags, out, err);
        if (*errors_cmd) return cmd_errors(errors_flags, out, err);
        if (*estimate_cmd) return cmd_estimate(est_flags, out, err);
    } catch (const LoadError& e) {
        err << "error: dataset " << e.what() << '\n';
        return kFailure;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return e.code() == ErrorCode::usage ? kUsage : kFailure;
    }
    return kUsage;
}

}  // namespace goodwin::cli
