#include "ptbox/config.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "ptbox/errors.hpp"

namespace ptbox {

std::string_view to_string(InitialKind kind)
{
    return kind == InitialKind::NeumannMode ? "neumann_mode" : "static_pt_eigenstate";
}

InitialKind initial_kind_from_string(std::string_view name)
{
    if (name == "neumann_mode") return InitialKind::NeumannMode;
    if (name == "static_pt_eigenstate") return InitialKind::StaticPtEigenstate;
    throw std::invalid_argument("unknown initial state kind '" + std::string(name) +
                                "' (expected neumann_mode or static_pt_eigenstate)");
}

double default_time_step(const WallTrajectory& traj, double t_final)
{
    double characteristic = t_final;
    if (traj.kind() == WallKind::Harmonic && traj.omega() > 0.0)
        characteristic = 2.0 * std::numbers::pi / traj.omega();
    return std::min(1e-3, characteristic / 1000.0);
}

void SimulationConfig::validate() const
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw ConfigError("physics.alpha", "Robin parameter must satisfy alpha > 0");
    if (n_modes < 1)
        throw ConfigError("numerics.n_modes", "need at least one mode");
    if (!(t_final > 0.0) || !std::isfinite(t_final))
        throw ConfigError("numerics.t_final", "must be > 0");
    if (!(sample_interval > 0.0) || sample_interval > t_final)
        throw ConfigError("numerics.sample_interval", "must satisfy 0 < sample_interval <= t_final");
    if (!(step.dt > 0.0) || !std::isfinite(step.dt))
        throw ConfigError("numerics.dt", "must be > 0");
    if (step.rtol && !(*step.rtol > 0.0))
        throw ConfigError("numerics.rtol", "must be > 0");
    if (initial.kind == InitialKind::NeumannMode && (initial.index < 0 || initial.index >= n_modes))
        throw ConfigError("initial.index", "Neumann mode index must lie in [0, n_modes)");
    if (initial.kind == InitialKind::StaticPtEigenstate && initial.index < 1)
        throw ConfigError("initial.index", "static PT eigenstates start at n = 1");
    if (output.format != "csv")
        throw ConfigError("output.format", "only 'csv' output is supported");

    const std::array<double, 3> probe{0.5 * t_final, t_final, 2.0 * t_final};
    if (!check_pt_symmetry(trajectory, probe))
        throw ConfigError("trajectory.kind", "wall law is not even in t; PT symmetry requires L(t) = L(-t)");
    try {
        validate_horizon(trajectory, t_final, std::min(step.dt, t_final / 1e4));
    } catch (const TrajectoryError& e) {
        throw ConfigError("numerics.t_final", e.what());
    }
}

namespace {

using Entries = std::map<std::string, std::string>;

double to_double(const Entries& entries, const std::string& key, double fallback)
{
    auto it = entries.find(key);
    if (it == entries.end()) return fallback;
    const std::string& text = it->second;
    double value = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw ConfigError(key, "expected a number, got '" + text + "'");
    return value;
}

int to_int(const Entries& entries, const std::string& key, int fallback)
{
    auto it = entries.find(key);
    if (it == entries.end()) return fallback;
    const std::string& text = it->second;
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw ConfigError(key, "expected an integer, got '" + text + "'");
    return value;
}

std::string to_text(const Entries& entries, const std::string& key, std::string fallback)
{
    auto it = entries.find(key);
    return it == entries.end() ? fallback : it->second;
}

const std::array<std::string_view, 14> known_keys{
    "trajectory.kind", "trajectory.a", "trajectory.b", "trajectory.omega",
    "physics.alpha",
    "numerics.n_modes", "numerics.t_final", "numerics.dt", "numerics.rtol", "numerics.sample_interval",
    "initial.kind", "initial.index",
    "output.path", "output.format",
};

Entries read_entries(std::istream& in)
{
    CLI::ConfigTOML parser;
    Entries entries;
    for (const CLI::ConfigItem& item : parser.from_config(in)) {
        if (item.name == "++" || item.name == "--") continue;
        std::string key;
        for (const auto& parent : item.parents) key += parent + ".";
        key += item.name;
        if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end())
            throw ConfigError(key, "unknown key");
        if (item.inputs.size() != 1)
            throw ConfigError(key, "expected a single value");
        entries[key] = item.inputs.front();
    }
    return entries;
}

SimulationConfig from_entries(const Entries& e)
{
    if (!e.contains("trajectory.kind"))
        throw ConfigError("trajectory.kind", "missing required key");

    SimulationConfig cfg;
    WallKind kind{};
    try {
        kind = wall_kind_from_string(e.at("trajectory.kind"));
    } catch (const std::invalid_argument& err) {
        throw ConfigError("trajectory.kind", err.what());
    }
    const double a = to_double(e, "trajectory.a", 10.0);
    const double b = kind == WallKind::Static ? to_double(e, "trajectory.b", 0.0) : to_double(e, "trajectory.b", 1.0);
    const double omega = to_double(e, "trajectory.omega", 1.0);
    try {
        cfg.trajectory = WallTrajectory(kind, a, kind == WallKind::Static ? 0.0 : b,
                                        kind == WallKind::Harmonic ? omega : 0.0);
    } catch (const std::invalid_argument& err) {
        throw ConfigError("trajectory", err.what());
    }

    cfg.alpha = to_double(e, "physics.alpha", 1.0);
    cfg.n_modes = to_int(e, "numerics.n_modes", 64);
    cfg.t_final = to_double(e, "numerics.t_final", 20.0);
    cfg.sample_interval = to_double(e, "numerics.sample_interval", std::min(0.05, cfg.t_final));
    cfg.step.dt = to_double(e, "numerics.dt", default_time_step(cfg.trajectory, cfg.t_final));
    if (e.contains("numerics.rtol"))
        cfg.step.rtol = to_double(e, "numerics.rtol", 0.0);

    try {
        cfg.initial.kind = initial_kind_from_string(to_text(e, "initial.kind", "neumann_mode"));
    } catch (const std::invalid_argument& err) {
        throw ConfigError("initial.kind", err.what());
    }
    cfg.initial.index = to_int(e, "initial.index", 1);
    cfg.output.path = to_text(e, "output.path", "");
    cfg.output.format = to_text(e, "output.format", "csv");

    cfg.validate();
    return cfg;
}

} // namespace

SimulationConfig parse_config_string(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return from_entries(read_entries(in));
}

SimulationConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("<file>", "cannot open config file '" + path.string() + "'");
    return from_entries(read_entries(in));
}

} // namespace ptbox
