#include "goodwin/model.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "goodwin/errors.hpp"

namespace goodwin {
namespace {

void require_finite_state(const State& s) {
    if (!std::isfinite(s.u) || !std::isfinite(s.v)) {
        throw Error(ErrorCode::domain, fmt::format("non-finite state ({}, {})", s.u, s.v));
    }
}

}  // namespace

bool GoodwinParameters::admits_interior_equilibrium() const noexcept {
    if (rho == 0.0 || !(sigma > 0.0)) return false;
    const double u_star = 1.0 - (alpha + beta) * sigma;
    const double v_star = (alpha + gamma) / rho;
    return u_star > 0.0 && u_star < 1.0 && v_star > 0.0;
}

void GoodwinParameters::validate() const {
    for (double x : {alpha, beta, sigma, gamma, rho}) {
        if (!std::isfinite(x)) {
            throw Error(ErrorCode::domain, "non-finite model parameter");
        }
    }
    if (!(sigma > 0.0)) {
        throw Error(ErrorCode::parameter, fmt::format("sigma must be positive, got {}", sigma));
    }
}

Derivative vector_field(const State& s, const GoodwinParameters& p) {
    p.validate();
    require_finite_state(s);
    return {s.u * (-(p.alpha + p.gamma) + p.rho * s.v),
            s.v * ((1.0 - s.u) / p.sigma - (p.alpha + p.beta))};
}

EquilibriumPoint equilibrium(const GoodwinParameters& p) {
    p.validate();
    if (p.rho == 0.0) {
        throw Error(ErrorCode::equilibrium_undefined, "equilibrium employment undefined for rho = 0");
    }
    return {1.0 - (p.alpha + p.beta) * p.sigma, (p.alpha + p.gamma) / p.rho,
            p.admits_interior_equilibrium()};
}

double period(const GoodwinParameters& p) {
    p.validate();
    const double radicand = (p.alpha + p.gamma) * (1.0 / p.sigma - (p.alpha + p.beta));
    if (!(radicand > 0.0)) {
        throw Error(ErrorCode::period_undefined,
                    fmt::format("cycle period undefined: radicand {} is not positive", radicand));
    }
    return 2.0 * std::numbers::pi / std::sqrt(radicand);
}

double first_integral(const State& s, const GoodwinParameters& p) {
    p.validate();
    require_finite_state(s);
    if (!(s.u > 0.0) || !(s.v > 0.0)) {
        throw Error(ErrorCode::domain,
                    fmt::format("first integral needs u > 0 and v > 0, got ({}, {})", s.u, s.v));
    }
    const double inv_sigma = 1.0 / p.sigma;
    return s.u * inv_sigma - (inv_sigma - (p.alpha + p.beta)) * std::log(s.u) + p.rho * s.v -
           (p.alpha + p.gamma) * std::log(s.v);
}

}  // namespace goodwin
