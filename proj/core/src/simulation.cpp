#include "goodwin/simulation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include <boost/numeric/odeint.hpp>
#include <fmt/format.h>

#include "goodwin/errors.hpp"

namespace goodwin {
namespace {

using OdeState = std::array<double, 2>;

constexpr double kSectionNoise = 1e-9;

class Recorder {
public:
    Recorder(const GoodwinParameters& p, double drift_tolerance)
        : params_(p), drift_tolerance_(drift_tolerance) {}

    void record(double t, const State& s) {
        if (!std::isfinite(s.u) || !std::isfinite(s.v)) {
            throw Error(ErrorCode::domain, fmt::format("non-finite state at t = {}", t));
        }
        if (!(s.u > 0.0) || !(s.v > 0.0)) {
            throw Error(ErrorCode::left_quadrant,
                        fmt::format("state ({}, {}) left the positive quadrant at t = {}; "
                                    "reduce the step",
                                    s.u, s.v, t));
        }
        const double h = first_integral(s, params_);
        if (!h_values_.empty()) {
            const double drift = std::abs(h - h_values_.front());
            if (drift > drift_tolerance_) {
                throw Error(ErrorCode::drift_exceeded,
                            fmt::format("first-integral drift {:.3e} exceeds tolerance {:.3e} at "
                                        "t = {}; reduce the step",
                                        drift, drift_tolerance_, t));
            }
        }
        times_.push_back(t);
        states_.push_back(s);
        h_values_.push_back(h);
    }

    Trajectory finish() && {
        return Trajectory(params_, std::move(times_), std::move(states_), std::move(h_values_));
    }

private:
    GoodwinParameters params_;
    double drift_tolerance_;
    std::vector<double> times_;
    std::vector<State> states_;
    std::vector<double> h_values_;
};

State rk4_step(const State& s, double dt, const GoodwinParameters& p) {
    const auto f = [&p](const State& x) { return vector_field(x, p); };
    const Derivative k1 = f(s);
    const Derivative k2 = f({s.u + 0.5 * dt * k1.du, s.v + 0.5 * dt * k1.dv});
    const Derivative k3 = f({s.u + 0.5 * dt * k2.du, s.v + 0.5 * dt * k2.dv});
    const Derivative k4 = f({s.u + dt * k3.du, s.v + dt * k3.dv});
    return {s.u + dt / 6.0 * (k1.du + 2.0 * k2.du + 2.0 * k3.du + k4.du),
            s.v + dt / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv)};
}

void integrate_rk4(const GoodwinParameters& p, const State& s0, const IntegratorConfig& cfg,
                   Recorder& rec) {
    const auto full_steps = static_cast<long long>(std::floor(cfg.t_end / cfg.step));
    State s = s0;
    for (long long i = 1; i <= full_steps; ++i) {
        s = rk4_step(s, cfg.step, p);
        rec.record(static_cast<double>(i) * cfg.step, s);
    }
    // Partial last step so the trajectory ends exactly at t_end.
    const double t_last = static_cast<double>(full_steps) * cfg.step;
    const double remainder = cfg.t_end - t_last;
    if (remainder > 1e-12 * cfg.step) {
        s = rk4_step(s, remainder, p);
        rec.record(cfg.t_end, s);
    }
}

void integrate_adaptive(const GoodwinParameters& p, const State& s0, const IntegratorConfig& cfg,
                        Recorder& rec) {
    namespace odeint = boost::numeric::odeint;
    using Stepper = odeint::runge_kutta_dopri5<OdeState>;

    const auto system = [&p](const OdeState& x, OdeState& dxdt, double /*t*/) {
        const Derivative d = vector_field({x[0], x[1]}, p);
        dxdt = {d.du, d.dv};
    };
    bool first = true;
    const auto observer = [&rec, &first](const OdeState& x, double t) {
        // odeint reports the initial state too; it is already recorded.
        if (first) {
            first = false;
            return;
        }
        rec.record(t, {x[0], x[1]});
    };
    OdeState x{s0.u, s0.v};
    auto stepper =
        odeint::make_controlled<Stepper>(cfg.error_tolerance, cfg.error_tolerance);
    odeint::integrate_adaptive(stepper, system, x, 0.0, cfg.t_end, cfg.step, observer);
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw Error(ErrorCode::parameter, fmt::format("step must be positive, got {}", step));
    }
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        throw Error(ErrorCode::parameter, fmt::format("t_end must be positive, got {}", t_end));
    }
    if (!(drift_tolerance > 0.0)) {
        throw Error(ErrorCode::parameter,
                    fmt::format("drift tolerance must be positive, got {}", drift_tolerance));
    }
    if (method == IntegrationMethod::adaptive && !(error_tolerance > 0.0)) {
        throw Error(ErrorCode::parameter,
                    fmt::format("error tolerance must be positive, got {}", error_tolerance));
    }
}

Trajectory::Trajectory(GoodwinParameters params, std::vector<double> times,
                       std::vector<State> states, std::vector<double> h_values)
    : params_(params),
      times_(std::move(times)),
      states_(std::move(states)),
      h_values_(std::move(h_values)) {
    if (times_.empty() || times_.size() != states_.size() || times_.size() != h_values_.size()) {
        throw Error(ErrorCode::parameter, "trajectory sequences must be non-empty and equal length");
    }
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (!(times_[i] > times_[i - 1])) {
            throw Error(ErrorCode::parameter, "trajectory times must be strictly increasing");
        }
    }
}

double Trajectory::max_drift() const noexcept {
    double worst = 0.0;
    for (double h : h_values_) worst = std::max(worst, std::abs(h - h_values_.front()));
    return worst;
}

State Trajectory::state_at(double t) const {
    if (t < times_.front() || t > times_.back()) {
        throw Error(ErrorCode::domain,
                    fmt::format("t = {} outside trajectory span [{}, {}]", t, times_.front(),
                                times_.back()));
    }
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.end()) return states_.back();
    const auto hi = static_cast<std::size_t>(it - times_.begin());
    const std::size_t lo = hi - 1;
    const double t0 = times_[lo];
    const double dt = times_[hi] - t0;
    const double x = (t - t0) / dt;
    const double h00 = (1.0 + 2.0 * x) * (1.0 - x) * (1.0 - x);
    const double h10 = x * (1.0 - x) * (1.0 - x);
    const double h01 = x * x * (3.0 - 2.0 * x);
    const double h11 = x * x * (x - 1.0);
    const State& a = states_[lo];
    const State& b = states_[hi];
    const Derivative da = vector_field(a, params_);
    const Derivative db = vector_field(b, params_);
    return {h00 * a.u + h10 * dt * da.du + h01 * b.u + h11 * dt * db.du,
            h00 * a.v + h10 * dt * da.dv + h01 * b.v + h11 * dt * db.dv};
}

Trajectory simulate(const GoodwinParameters& p, const State& s0, const IntegratorConfig& cfg) {
    p.validate();
    cfg.validate();
    Recorder rec(p, cfg.drift_tolerance);
    rec.record(0.0, s0);
    switch (cfg.method) {
        case IntegrationMethod::rk4: integrate_rk4(p, s0, cfg, rec); break;
        case IntegrationMethod::adaptive: integrate_adaptive(p, s0, cfg, rec); break;
    }
    return std::move(rec).finish();
}

PeriodMeasurement measure_period_detailed(const Trajectory& traj) {
    const EquilibriumPoint eq = equilibrium(traj.params());
    const auto& times = traj.times();
    const auto& states = traj.states();

    PeriodMeasurement out;
    std::optional<bool> direction;  // true: crossing with u increasing
    for (std::size_t i = 1; i < states.size(); ++i) {
        const double a = states[i - 1].u - eq.u_star;
        const double b = states[i].u - eq.u_star;
        const bool upward = a < 0.0 && b >= 0.0;
        const bool downward = a > 0.0 && b <= 0.0;
        if (!upward && !downward) continue;
        const double frac = a / (a - b);
        const double v_cross = states[i - 1].v + frac * (states[i].v - states[i - 1].v);
        // Round-off jitter of a trajectory sitting on the equilibrium is not a crossing.
        if (!(v_cross - eq.v_star > kSectionNoise * std::max(1.0, std::abs(eq.v_star)))) continue;
        if (!direction) direction = upward;
        if (*direction != upward) continue;
        out.crossing_times.push_back(times[i - 1] + frac * (times[i] - times[i - 1]));
    }
    if (out.crossing_times.size() < 2) {
        throw Error(ErrorCode::insufficient_data,
                    fmt::format("period measurement needs two section crossings, found {}",
                                out.crossing_times.size()));
    }
    out.mean_period = (out.crossing_times.back() - out.crossing_times.front()) /
                      static_cast<double>(out.crossing_times.size() - 1);
    return out;
}

}  // namespace goodwin
