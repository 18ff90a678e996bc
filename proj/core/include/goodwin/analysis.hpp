#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "goodwin/dataset.hpp"

namespace goodwin {

/// Undo the percent-for-fraction reporting error: x / 100.
double correct_scale(double reported);

/// The same parameters with gamma and rho multiplied by 100, i.e. long-run
/// coefficients read off a percent-scaled table as if they were fractions.
GoodwinParameters hundredfold_coefficients(const GoodwinParameters& corrected) noexcept;

/// y_t = constant + sum_i ar[i] y_{t-1-i} + sum_j dl[j] x_{t-j} + e_t
struct ArdlCoefficients {
    double constant = 0.0;
    std::vector<double> ar;
    std::vector<double> dl;
};

struct LongRun {
    double constant = 0.0;
    double slope = 0.0;
};

/// Steady state of the ARDL recursion: (constant, sum dl) / (1 - sum ar).
/// Throws long_run_undefined when |1 - sum ar| < 1e-12.
LongRun long_run(const ArdlCoefficients& c);

enum class Scale { harvie, corrected };

const char* to_string(Scale s) noexcept;

enum class CellStatus {
    match,                   // computed value rounds to the printed cell
    mismatch,                // computed value disagrees with the printed cell
    documented_discrepancy,  // known inconsistency in the printed table; warns only
    not_printed,             // computable, but the table leaves the cell blank
    blank,                   // neither computable nor printed
};

const char* to_string(CellStatus s) noexcept;

struct RegeneratedCell {
    std::string country;
    Column column;  // printed column the computed value is checked against
    Scale scale;
    std::optional<double> computed;
    std::optional<PrintedValue> printed;
    std::optional<double> deviation;  // round(computed, printed decimals) - printed
    CellStatus status = CellStatus::blank;
    std::string note;
};

struct RegeneratedTable {
    std::vector<RegeneratedCell> cells;

    bool all_match() const noexcept;  // no cell has status mismatch
    std::vector<const RegeneratedCell*> with_status(CellStatus s) const;
    const RegeneratedCell& at(std::string_view country, Column column) const;
};

/// True for the cells the printed table itself gets inconsistent: the US
/// corrected v* and Harvie's rounding of u* for Finland, Germany and Norway.
bool is_documented_discrepancy(std::string_view country, Column column) noexcept;

/// Rounds x to `decimals` places (half away from zero).
double round_to(double x, int decimals);

/// Recomputes u*, v* and T under both coefficient scales for every country
/// and checks each against the printed cell at its printed precision.
RegeneratedTable regenerate_table(const Dataset& ds);

/// Long-run coefficients Harvie's own table implies where the printed value
/// is wrong (Germany rho, US gamma). They derive from ARDL estimates that
/// are not available here and are carried as constants.
struct DocumentedRecomputation {
    std::string country;
    Column column;
    double printed = 0.0;
    double recomputed = 0.0;
    double v_star_stated = 0.0;  // Harvie-scale equilibrium employment stated for the recomputed value
};

std::span<const DocumentedRecomputation> documented_recomputations() noexcept;

struct ErrorReport {
    std::map<std::string, double> per_country;  // |v* - v_bar| / v_bar
    double average = 0.0;
    std::vector<std::string> included;  // table order
};

/// Relative error of the printed v* column (Harvie or corrected) against the
/// empirical mean. The US enters only with include_us; it has no Harvie value,
/// so (harvie, include_us) raises a usage error.
ErrorReport error_report(const Dataset& ds, Scale which, bool include_us);

/// Average relative errors stated alongside the table, in percent, with the
/// acceptance tolerance in percentage points.
struct PublishedAverage {
    double percent = 0.0;
    double tolerance_pp = 0.0;
};

PublishedAverage published_average(Scale which, bool include_us);

}  // namespace goodwin
