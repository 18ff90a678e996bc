#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace goodwin::cli {

enum class Format { csv, table, markdown };

/// Where and how a report is written.
struct OutputSpec {
    Format format = Format::table;
    std::string destination;        // empty: standard output
    std::optional<int> decimals;    // overrides the precision of value columns

    int decimals_or(int fallback) const { return decimals.value_or(fallback); }
};

std::optional<Format> parse_format(const std::string& name);

/// Rows of pre-formatted cells. Columns flagged numeric are right-aligned in
/// the aligned-table format.
class TextTable {
public:
    TextTable(std::vector<std::string> headers, std::vector<bool> numeric);

    void add_row(std::vector<std::string> row);
    void render(std::ostream& os, Format format) const;

private:
    std::vector<std::string> headers_;
    std::vector<bool> numeric_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace goodwin::cli
