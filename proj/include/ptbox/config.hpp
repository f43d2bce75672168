#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ptbox/trajectory.hpp"

namespace ptbox {

enum class InitialKind { NeumannMode, StaticPtEigenstate };

std::string_view to_string(InitialKind kind);
InitialKind initial_kind_from_string(std::string_view name);

struct InitialState {
    InitialKind kind = InitialKind::NeumannMode;
    int index = 1;

    friend bool operator==(const InitialState&, const InitialState&) = default;
};

/// Fixed RK4 step `dt`, or step-doubling control at `rtol` (then `dt` is the first trial step).
struct StepControl {
    double dt = 1e-3;
    std::optional<double> rtol;

    bool adaptive() const noexcept { return rtol.has_value(); }
    friend bool operator==(const StepControl&, const StepControl&) = default;
};

struct OutputSpec {
    std::string path;
    std::string format = "csv";

    friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

// Defaults: harmonic wall a = 10, b = 1, omega = 1; alpha = 1; 64 modes.
struct SimulationConfig {
    WallTrajectory trajectory = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    double alpha = 1.0;
    int n_modes = 64;
    double t_final = 20.0;
    StepControl step{};
    InitialState initial{};
    double sample_interval = 0.05;
    OutputSpec output{};

    /// Throws ConfigError (with key path) or TrajectoryError.
    void validate() const;

    friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

/// min(1e-3, T/1000) with T = 2 pi / omega for a harmonic wall and T = t_final otherwise.
double default_time_step(const WallTrajectory& traj, double t_final);

/// Parse a TOML-style config with [trajectory], [physics], [numerics], [initial], [output] sections.
SimulationConfig parse_config(const std::filesystem::path& path);
SimulationConfig parse_config_string(std::string_view text);

} // namespace ptbox
