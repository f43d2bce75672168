#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ptbox/config.hpp"
#include "ptbox/observables.hpp"

namespace ptbox {

enum class SweepAxis { B, Omega, Alpha };

std::string_view to_string(SweepAxis axis);
SweepAxis sweep_axis_from_string(std::string_view name);

/// `base` with one parameter replaced; throws ConfigError when the result is invalid.
SimulationConfig with_parameter(const SimulationConfig& base, SweepAxis axis, double value);

struct SweepRun {
    double value = 0.0;
    std::optional<SimulationConfig> config;
    std::optional<ObservableSeries> series;
    std::string error;   // empty on success

    bool ok() const noexcept { return error.empty(); }
};

/// Independent runs, one per value, on up to `jobs` threads (0 = hardware concurrency).
/// Results come back in the order of `values`; a failing run does not stop its siblings.
std::vector<SweepRun> run_sweep(const SimulationConfig& base, SweepAxis axis, std::span<const double> values,
                                unsigned jobs = 0);

} // namespace ptbox
