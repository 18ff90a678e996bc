#pragma once

// Closed-form mathematics of the Goodwin growth-cycle model:
//
//   u'/u = -(alpha + gamma) + rho * v
//   v'/v = (1 - u) / sigma - (alpha + beta)
//
// u is the wage share, v the employment rate. Orbits are closed curves
// around (u*, v*) whenever the equilibrium is a center.

namespace goodwin {

struct GoodwinParameters {
    double alpha = 0.0;  // productivity growth rate, 1/year
    double beta = 0.0;   // labour-force growth rate, 1/year
    double sigma = 1.0;  // capital-to-output ratio, years
    double gamma = 0.0;  // Phillips-curve intercept magnitude, 1/year
    double rho = 0.0;    // Phillips-curve slope, 1/year per unit employment

    /// rho != 0, 0 < 1 - (alpha + beta) sigma < 1 and (alpha + gamma) / rho > 0.
    bool admits_interior_equilibrium() const noexcept;

    /// Throws ErrorCode::domain on non-finite fields, ErrorCode::parameter on sigma <= 0.
    void validate() const;

    friend bool operator==(const GoodwinParameters&, const GoodwinParameters&) = default;
};

struct State {
    double u = 0.0;  // wage share
    double v = 0.0;  // employment rate

    friend bool operator==(const State&, const State&) = default;
};

struct Derivative {
    double du = 0.0;
    double dv = 0.0;
};

struct EquilibriumPoint {
    double u_star = 0.0;
    double v_star = 0.0;
    bool interior = false;  // admits_interior_equilibrium() of the generating parameters

    State state() const noexcept { return {u_star, v_star}; }
};

/// (du/dt, dv/dt) at s.
Derivative vector_field(const State& s, const GoodwinParameters& p);

/// Center of the cycle. Values outside (0, 1) are returned, not rejected;
/// `interior` records whether the point is economically admissible.
/// Throws ErrorCode::equilibrium_undefined when rho == 0.
EquilibriumPoint equilibrium(const GoodwinParameters& p);

/// Linearized cycle period 2 pi / sqrt((alpha + gamma)(1/sigma - (alpha + beta))).
/// Throws ErrorCode::period_undefined when the radicand is not positive.
double period(const GoodwinParameters& p);

/// Lotka-Volterra first integral
///   H = u/sigma - (1/sigma - (alpha + beta)) ln u + rho v - (alpha + gamma) ln v,
/// constant along every solution. Throws ErrorCode::domain for u <= 0 or v <= 0.
double first_integral(const State& s, const GoodwinParameters& p);

}  // namespace goodwin
