#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <vector>

#include "ptbox/config.hpp"
#include "ptbox/errors.hpp"

namespace ptbox {

using StateVector = Eigen::VectorXcd;

/// Expansion coefficients at time t.
struct ModeCoefficients {
    double t = 0.0;
    StateVector c;
};

struct IntegratorDiagnostics {
    std::size_t steps_taken = 0;
    std::size_t rejected_steps = 0;
    double max_error_estimate = 0.0;   // adaptive mode only
    double min_step = std::numeric_limits<double>::infinity();
    double max_step = 0.0;
};

/// Sample times 0, h, 2h, ... and t_final as the last entry.
std::vector<double> sample_times(double t_final, double interval);

// A right-hand side is any callable  void(double t, const StateVector& c, StateVector& dcdt).

template <class Rhs>
class Rk4 {
public:
    Rk4(const Rhs& rhs, Eigen::Index size)
        : rhs_(rhs), k1_(size), k2_(size), k3_(size), k4_(size), tmp_(size) {}

    void step(double t, StateVector& c, double h)
    {
        rhs_(t, c, k1_);
        tmp_ = c + (0.5 * h) * k1_;
        rhs_(t + 0.5 * h, tmp_, k2_);
        tmp_ = c + (0.5 * h) * k2_;
        rhs_(t + 0.5 * h, tmp_, k3_);
        tmp_ = c + h * k3_;
        rhs_(t + h, tmp_, k4_);
        c += (h / 6.0) * (k1_ + 2.0 * k2_ + 2.0 * k3_ + k4_);
    }

private:
    const Rhs& rhs_;
    StateVector k1_, k2_, k3_, k4_, tmp_;
};

namespace detail {

inline void require_finite(const StateVector& c, double t)
{
    if (!c.allFinite()) {
        std::ostringstream msg;
        msg << "non-finite state at t = " << t;
        throw IntegrationError(msg.str());
    }
}

} // namespace detail

/// Fixed-step RK4 from t0 to t1 (either direction) with |step| <= max_step.
template <class Rhs>
void propagate_fixed(const Rhs& rhs, double t0, double t1, StateVector& c, double max_step,
                     IntegratorDiagnostics& diag)
{
    const double span = t1 - t0;
    if (span == 0.0) return;
    const auto steps = static_cast<std::size_t>(std::ceil(std::abs(span) / max_step * (1.0 - 1e-12)));
    const double h = span / static_cast<double>(std::max<std::size_t>(steps, 1));
    Rk4<Rhs> rk(rhs, c.size());
    for (std::size_t i = 0; i < std::max<std::size_t>(steps, 1); ++i) {
        const double t = t0 + static_cast<double>(i) * h;
        rk.step(t, c, h);
        detail::require_finite(c, t + h);
    }
    diag.steps_taken += std::max<std::size_t>(steps, 1);
    diag.min_step = std::min(diag.min_step, std::abs(h));
    diag.max_step = std::max(diag.max_step, std::abs(h));
}

/// Step-doubling RK4 from t0 to t1 > t0. `h` carries the trial step between calls.
template <class Rhs>
void propagate_adaptive(const Rhs& rhs, double t0, double t1, StateVector& c, double& h, double rtol,
                        IntegratorDiagnostics& diag)
{
    Rk4<Rhs> rk(rhs, c.size());
    StateVector full(c.size()), half(c.size());
    double t = t0;
    while (t < t1) {
        const bool last = t + h >= t1;
        const double step = last ? t1 - t : h;
        if (step < 1e-14 * std::max(1.0, std::abs(t))) {
            std::ostringstream msg;
            msg << "step size underflow at t = " << t << " (h = " << step << ")";
            throw IntegrationError(msg.str());
        }
        full = c;
        rk.step(t, full, step);
        half = c;
        rk.step(t, half, 0.5 * step);
        rk.step(t + 0.5 * step, half, 0.5 * step);

        const double scale = std::max(half.norm(), 1e-300);
        const double err = (half - full).norm() / 15.0 / scale;
        if (!std::isfinite(err)) {
            std::ostringstream msg;
            msg << "non-finite error estimate at t = " << t;
            throw IntegrationError(msg.str());
        }
        const double factor = err > 0.0 ? std::clamp(0.9 * std::pow(rtol / err, 0.2), 0.2, 5.0) : 5.0;
        if (err <= rtol) {
            c = half;
            t = last ? t1 : t + step;
            diag.steps_taken += 1;
            diag.max_error_estimate = std::max(diag.max_error_estimate, err);
            diag.min_step = std::min(diag.min_step, step);
            diag.max_step = std::max(diag.max_step, step);
            detail::require_finite(c, t);
            if (!last || factor < 1.0) h = step * factor;
        } else {
            diag.rejected_steps += 1;
            h = step * factor;
        }
    }
}

/// Integrate from the first sample time through all of `times`, recording the state at each.
template <class Rhs>
std::vector<ModeCoefficients> sample_evolution(const Rhs& rhs, StateVector c, std::span<const double> times,
                                               const StepControl& control, IntegratorDiagnostics& diag)
{
    std::vector<ModeCoefficients> samples;
    samples.reserve(times.size());
    if (times.empty()) return samples;
    detail::require_finite(c, times.front());
    samples.push_back({times.front(), c});
    double h = control.dt;
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (control.adaptive())
            propagate_adaptive(rhs, times[i - 1], times[i], c, h, *control.rtol, diag);
        else
            propagate_fixed(rhs, times[i - 1], times[i], c, control.dt, diag);
        samples.push_back({times[i], c});
    }
    return samples;
}

} // namespace ptbox
