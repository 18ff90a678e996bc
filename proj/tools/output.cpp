#include "output.hpp"

#include <algorithm>
#include <stdexcept>

namespace goodwin::cli {
namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::optional<Format> parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "table") return Format::table;
    if (name == "markdown" || name == "md") return Format::markdown;
    return std::nullopt;
}

TextTable::TextTable(std::vector<std::string> headers, std::vector<bool> numeric)
    : headers_(std::move(headers)), numeric_(std::move(numeric)) {
    if (numeric_.size() != headers_.size()) {
        throw std::invalid_argument("TextTable: alignment flags do not match headers");
    }
}

void TextTable::add_row(std::vector<std::string> row) {
    if (row.size() != headers_.size()) {
        throw std::invalid_argument("TextTable: row width does not match headers");
    }
    rows_.push_back(std::move(row));
}

void TextTable::render(std::ostream& os, Format format) const {
    const std::size_t ncols = headers_.size();
    if (format == Format::csv) {
        for (std::size_t c = 0; c < ncols; ++c) os << (c ? "," : "") << csv_escape(headers_[c]);
        os << '\n';
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < ncols; ++c) os << (c ? "," : "") << csv_escape(row[c]);
            os << '\n';
        }
        return;
    }

    std::vector<std::size_t> width(ncols);
    for (std::size_t c = 0; c < ncols; ++c) {
        width[c] = headers_[c].size();
        for (const auto& row : rows_) width[c] = std::max(width[c], row[c].size());
    }
    const auto pad = [&](const std::string& s, std::size_t c) {
        const std::string fill(width[c] - s.size(), ' ');
        return numeric_[c] ? fill + s : s + fill;
    };

    if (format == Format::markdown) {
        const auto line = [&](const std::vector<std::string>& cells) {
            os << '|';
            for (std::size_t c = 0; c < ncols; ++c) os << ' ' << pad(cells[c], c) << " |";
            os << '\n';
        };
        line(headers_);
        os << '|';
        for (std::size_t c = 0; c < ncols; ++c) {
            os << (numeric_[c] ? std::string(width[c] + 1, '-') + ":|"
                               : ":" + std::string(width[c] + 1, '-') + "|");
        }
        os << '\n';
        for (const auto& row : rows_) line(row);
        return;
    }

    const auto line = [&](const std::vector<std::string>& cells) {
        std::string text;
        for (std::size_t c = 0; c < ncols; ++c) {
            if (c) text += "  ";
            text += pad(cells[c], c);
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        os << text << '\n';
    };
    line(headers_);
    std::string rule;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (c) rule += "  ";
        rule += std::string(width[c], '-');
    }
    os << rule << '\n';
    for (const auto& row : rows_) line(row);
}

}  // namespace goodwin::cli
