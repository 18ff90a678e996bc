#include "goodwin/analysis.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "goodwin/errors.hpp"

namespace goodwin {
namespace {

struct DiscrepancyCell {
    std::string_view country;
    Column column;
    std::string_view note;
};

constexpr std::array<DiscrepancyCell, 4> kDocumentedDiscrepancies = {{
    {"US", Column::v_star_correct,
     "printed 0.86 is not reproducible from the printed US coefficients"},
    {"Finland", Column::u_star_harvie, "Harvie's rounding of u* differs from the recomputation"},
    {"Germany", Column::u_star_harvie, "Harvie's rounding of u* differs from the recomputation"},
    {"Norway", Column::u_star_harvie, "Harvie's rounding of u* differs from the recomputation"},
}};

const std::array<DocumentedRecomputation, 2> kRecomputations = {{
    {"Germany", Column::rho_harvie, 65.55, 92.44, 0.93},
    {"US", Column::gamma_harvie, 8.42, -8.42, 1.06},
}};

std::string_view discrepancy_note(std::string_view country, Column column) noexcept {
    for (const auto& d : kDocumentedDiscrepancies) {
        if (d.country == country && d.column == column) return d.note;
    }
    return {};
}

template <class F>
std::optional<double> try_compute(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::equilibrium_undefined ||
            e.code() == ErrorCode::period_undefined) {
            return std::nullopt;
        }
        throw;
    }
}

RegeneratedCell make_cell(const CountryRecord& rec, Column column, Scale scale,
                          std::optional<double> computed) {
    RegeneratedCell cell{rec.name, column, scale, computed, rec.cell(column), std::nullopt,
                         CellStatus::blank, {}};
    if (!computed && !cell.printed) return cell;
    if (!cell.printed) {
        cell.status = CellStatus::not_printed;
        cell.note = "no printed value";
        return cell;
    }
    if (computed) {
        cell.deviation = round_to(*computed, cell.printed->decimals) - cell.printed->value;
        // The deviation is a difference of two values on the same decimal grid.
        const double ulp = std::pow(10.0, -cell.printed->decimals);
        const bool same = std::abs(*cell.deviation) < 0.5 * ulp;
        if (same) {
            cell.deviation = 0.0;
            cell.status = CellStatus::match;
        } else {
            cell.status = CellStatus::mismatch;
        }
    } else {
        cell.status = CellStatus::mismatch;
        cell.note = "not computable from the stored coefficients";
    }
    if (cell.status == CellStatus::mismatch && is_documented_discrepancy(rec.name, column)) {
        cell.status = CellStatus::documented_discrepancy;
        cell.note = std::string(discrepancy_note(rec.name, column));
    }
    return cell;
}

}  // namespace

double correct_scale(double reported) {
    if (!std::isfinite(reported)) {
        throw Error(ErrorCode::domain, "cannot rescale a non-finite coefficient");
    }
    return reported / 100.0;
}

GoodwinParameters hundredfold_coefficients(const GoodwinParameters& corrected) noexcept {
    GoodwinParameters p = corrected;
    p.gamma *= 100.0;
    p.rho *= 100.0;
    return p;
}

LongRun long_run(const ArdlCoefficients& c) {
    const double denom = 1.0 - std::accumulate(c.ar.begin(), c.ar.end(), 0.0);
    if (std::abs(denom) < 1e-12) {
        throw Error(ErrorCode::long_run_undefined,
                    "long-run coefficients undefined: autoregressive lags sum to one");
    }
    const double dl_sum = std::accumulate(c.dl.begin(), c.dl.end(), 0.0);
    return {c.constant / denom, dl_sum / denom};
}

const char* to_string(Scale s) noexcept {
    return s == Scale::harvie ? "harvie" : "corrected";
}

const char* to_string(CellStatus s) noexcept {
    switch (s) {
        case CellStatus::match: return "match";
        case CellStatus::mismatch: return "MISMATCH";
        case CellStatus::documented_discrepancy: return "documented";
        case CellStatus::not_printed: return "not-printed";
        case CellStatus::blank: return "blank";
    }
    return "?";
}

bool RegeneratedTable::all_match() const noexcept {
    for (const auto& c : cells) {
        if (c.status == CellStatus::mismatch) return false;
    }
    return true;
}

std::vector<const RegeneratedCell*> RegeneratedTable::with_status(CellStatus s) const {
    std::vector<const RegeneratedCell*> out;
    for (const auto& c : cells) {
        if (c.status == s) out.push_back(&c);
    }
    return out;
}

const RegeneratedCell& RegeneratedTable::at(std::string_view country, Column column) const {
    for (const auto& c : cells) {
        if (c.country == country && c.column == column) return c;
    }
    throw Error(ErrorCode::usage,
                fmt::format("no regenerated cell {}/{}", country, column_name(column)));
}

bool is_documented_discrepancy(std::string_view country, Column column) noexcept {
    return !discrepancy_note(country, column).empty();
}

double round_to(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::round(x * scale) / scale;
}

RegeneratedTable regenerate_table(const Dataset& ds) {
    RegeneratedTable table;
    for (const auto& rec : ds.records) {
        const GoodwinParameters harvie = rec.params_harvie();
        const GoodwinParameters corrected = rec.params_correct();
        const auto u_star = [](const GoodwinParameters& p) {
            return try_compute([&] { return equilibrium(p).u_star; });
        };
        const auto v_star = [](const GoodwinParameters& p) {
            return try_compute([&] { return equilibrium(p).v_star; });
        };
        const auto cycle = [](const GoodwinParameters& p) {
            return try_compute([&] { return period(p); });
        };
        table.cells.push_back(make_cell(rec, Column::u_star_harvie, Scale::harvie, u_star(harvie)));
        table.cells.push_back(
            make_cell(rec, Column::u_star_correct, Scale::corrected, u_star(corrected)));
        table.cells.push_back(make_cell(rec, Column::v_star_harvie, Scale::harvie, v_star(harvie)));
        table.cells.push_back(
            make_cell(rec, Column::v_star_correct, Scale::corrected, v_star(corrected)));
        table.cells.push_back(make_cell(rec, Column::T_harvie, Scale::harvie, cycle(harvie)));
        table.cells.push_back(make_cell(rec, Column::T_correct, Scale::corrected, cycle(corrected)));
    }
    return table;
}

std::span<const DocumentedRecomputation> documented_recomputations() noexcept {
    return kRecomputations;
}

ErrorReport error_report(const Dataset& ds, Scale which, bool include_us) {
    if (which == Scale::harvie && include_us) {
        throw Error(ErrorCode::usage, "Harvie's table has no US employment equilibrium");
    }
    const Column column = which == Scale::harvie ? Column::v_star_harvie : Column::v_star_correct;
    ErrorReport report;
    double sum = 0.0;
    for (const auto& rec : ds.records) {
        if (rec.name == "US" && !include_us) continue;
        const auto& predicted = rec.cell(column);
        if (!predicted) {
            throw Error(ErrorCode::usage,
                        fmt::format("{} has no printed {}", rec.name, column_name(column)));
        }
        const double v_bar = rec.value(Column::v_bar);
        const double rel = std::abs(predicted->value - v_bar) / v_bar;
        report.per_country[rec.name] = rel;
        report.included.push_back(rec.name);
        sum += rel;
    }
    if (report.included.empty()) throw Error(ErrorCode::insufficient_data, "no countries in report");
    report.average = sum / static_cast<double>(report.included.size());
    return report;
}

PublishedAverage published_average(Scale which, bool include_us) {
    if (which == Scale::harvie) {
        if (include_us) throw Error(ErrorCode::usage, "no published Harvie average including the US");
        return {9.09, 0.05};
    }
    return include_us ? PublishedAverage{1.40, 0.10} : PublishedAverage{0.60, 0.10};
}

}  // namespace goodwin
