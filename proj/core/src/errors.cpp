#include "goodwin/errors.hpp"

namespace goodwin {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::domain: return "domain";
        case ErrorCode::parameter: return "parameter";
        case ErrorCode::equilibrium_undefined: return "equilibrium-undefined";
        case ErrorCode::period_undefined: return "period-undefined";
        case ErrorCode::drift_exceeded: return "drift-exceeded";
        case ErrorCode::left_quadrant: return "left-quadrant";
        case ErrorCode::insufficient_data: return "insufficient-data";
        case ErrorCode::singular_design: return "singular-design";
        case ErrorCode::long_run_undefined: return "long-run-undefined";
        case ErrorCode::load: return "load";
        case ErrorCode::usage: return "usage";
    }
    return "unknown";
}

}  // namespace goodwin
