#pragma once

#include <cstddef>
#include <vector>

#include "goodwin/model.hpp"

namespace goodwin {

enum class IntegrationMethod {
    rk4,       // classical fixed-step 4th-order Runge-Kutta
    adaptive,  // Dormand-Prince 5(4) with per-step error control
};

struct IntegratorConfig {
    double step = 1e-3;             // years; initial step for the adaptive method
    double t_end = 30.0;            // years
    IntegrationMethod method = IntegrationMethod::rk4;
    double drift_tolerance = 1e-6;  // bound on max |H(t) - H(0)|
    double error_tolerance = 1e-10; // adaptive only: absolute and relative per-step tolerance

    void validate() const;
};

/// Time-indexed solution. All three sequences have the same length, times are
/// strictly increasing, and every state lies in the open positive quadrant.
class Trajectory {
public:
    Trajectory(GoodwinParameters params, std::vector<double> times, std::vector<State> states,
               std::vector<double> h_values);

    const GoodwinParameters& params() const noexcept { return params_; }
    const std::vector<double>& times() const noexcept { return times_; }
    const std::vector<State>& states() const noexcept { return states_; }
    const std::vector<double>& h_values() const noexcept { return h_values_; }
    std::size_t size() const noexcept { return times_.size(); }

    /// max |H(t) - H(0)| over the recorded samples.
    double max_drift() const noexcept;

    /// State at time t in [times().front(), times().back()], by cubic Hermite
    /// interpolation with the model's vector field as the slope.
    State state_at(double t) const;

private:
    GoodwinParameters params_;
    std::vector<double> times_;
    std::vector<State> states_;
    std::vector<double> h_values_;
};

/// Integrates from s0 over [0, cfg.t_end], recording every accepted step.
/// Throws drift_exceeded, left_quadrant or domain errors as soon as a step
/// violates the corresponding bound.
Trajectory simulate(const GoodwinParameters& p, const State& s0, const IntegratorConfig& cfg);

struct PeriodMeasurement {
    double mean_period = 0.0;         // years
    std::vector<double> crossing_times;
};

/// Mean revolution time from successive same-direction crossings of the ray
/// {u = u*, v > v*}, each located by linear interpolation between samples.
/// Throws insufficient_data with fewer than two crossings.
PeriodMeasurement measure_period_detailed(const Trajectory& traj);

inline double measure_period(const Trajectory& traj) {
    return measure_period_detailed(traj).mean_period;
}

}  // namespace goodwin
