#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace goodwin {

enum class ErrorCode {
    domain,                 // non-finite input, log of non-positive value
    parameter,              // invalid structural parameter (sigma <= 0, bad config)
    equilibrium_undefined,  // rho == 0
    period_undefined,       // non-positive radicand
    drift_exceeded,         // |H(t) - H(0)| above tolerance
    left_quadrant,          // state left u > 0, v > 0
    insufficient_data,      // too few section crossings or observations
    singular_design,        // constant regressor
    long_run_undefined,     // unit root in the ARDL lag polynomial
    load,                   // dataset parse/validation failure
    usage,                  // inconsistent request (e.g. Harvie report including US)
};

const char* to_string(ErrorCode code) noexcept;

/// Base exception for every failure raised by the library. The code lets
/// callers branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Dataset failure pinned to a row and column of the source file.
class LoadError : public Error {
public:
    LoadError(std::string row, std::string column, const std::string& what)
        : Error(ErrorCode::load, "row '" + row + "', column '" + column + "': " + what),
          row_(std::move(row)),
          column_(std::move(column)) {}

    const std::string& row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::string row_;
    std::string column_;
};

}  // namespace goodwin
