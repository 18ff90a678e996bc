#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "goodwin/model.hpp"

namespace goodwin {

/// A numeric table cell kept together with its printed text, so that
/// comparisons can be made at the precision the value was published with.
struct PrintedValue {
    double value = 0.0;
    std::string text;
    int decimals = 0;

    /// Parses a plain decimal literal ("-0.0842", "16.6", "32.00").
    static std::optional<PrintedValue> parse(std::string_view text);

    friend bool operator==(const PrintedValue&, const PrintedValue&) = default;
};

/// Columns of the corrected parameter/equilibrium table, in file order.
enum class Column : std::size_t {
    alpha,
    beta,
    sigma,
    gamma_harvie,
    gamma_correct,
    rho_harvie,
    rho_correct,
    u_star_harvie,
    u_star_correct,
    u_bar,
    v_star_harvie,
    v_star_correct,
    v_bar,
    T_harvie,
    T_correct,
};

inline constexpr std::size_t kColumnCount = 15;

std::string_view column_name(Column c) noexcept;
bool column_optional(Column c) noexcept;

struct CountryRecord {
    std::string name;
    std::array<std::optional<PrintedValue>, kColumnCount> cells;

    // Cells where Harvie's printed coefficient is not 100x the corrected one
    // (Germany rho: 65.55 printed vs 92.44 recomputed; US gamma: sign flip).
    bool gamma_harvie_discrepancy = false;
    bool rho_harvie_discrepancy = false;

    const std::optional<PrintedValue>& cell(Column c) const noexcept {
        return cells[static_cast<std::size_t>(c)];
    }
    /// Value of a required cell; throws if the cell is blank.
    double value(Column c) const;

    /// (alpha, beta, sigma, gamma_correct, rho_correct).
    GoodwinParameters params_correct() const;
    /// (alpha, beta, sigma, gamma_harvie, rho_harvie) exactly as printed by Harvie.
    GoodwinParameters params_harvie() const;

    friend bool operator==(const CountryRecord&, const CountryRecord&) = default;
};

struct Dataset {
    std::vector<CountryRecord> records;
    std::uint64_t checksum = 0;  // FNV-1a 64 of the source bytes

    const CountryRecord& at(std::string_view country) const;
    const CountryRecord* find(std::string_view country) const noexcept;
};

/// Countries in table order.
inline constexpr std::array<std::string_view, 10> kCountries = {
    "Australia", "Canada", "Finland", "France", "Germany",
    "Greece",    "Italy",  "Norway",  "UK",     "US"};

/// Checksum of the shipped table file.
inline constexpr std::uint64_t kBuiltinChecksum = 0x38a4530e25c1c89dULL;

std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// Parses and validates dataset text. Any schema or invariant violation
/// raises LoadError naming the offending row and column.
Dataset parse_dataset(std::string_view text);

/// Reads and parses a dataset file.
Dataset load_dataset(const std::filesystem::path& path);

/// The table compiled into the library; checksum-verified.
const Dataset& builtin_dataset();

/// Raw text of the compiled-in table.
std::string_view builtin_dataset_text() noexcept;

}  // namespace goodwin
