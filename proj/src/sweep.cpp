#include "ptbox/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "ptbox/errors.hpp"

namespace ptbox {

std::string_view to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::B: return "b";
    case SweepAxis::Omega: return "omega";
    case SweepAxis::Alpha: return "alpha";
    }
    return "unknown";
}

SweepAxis sweep_axis_from_string(std::string_view name)
{
    if (name == "b") return SweepAxis::B;
    if (name == "omega") return SweepAxis::Omega;
    if (name == "alpha") return SweepAxis::Alpha;
    throw std::invalid_argument("sweep axis must be one of b, omega, alpha (got '" + std::string(name) + "')");
}

SimulationConfig with_parameter(const SimulationConfig& base, SweepAxis axis, double value)
{
    SimulationConfig cfg = base;
    const auto& traj = base.trajectory;
    try {
        switch (axis) {
        case SweepAxis::B:
            cfg.trajectory = WallTrajectory(traj.kind(), traj.a(), value, traj.omega());
            break;
        case SweepAxis::Omega:
            cfg.trajectory = WallTrajectory(traj.kind(), traj.a(), traj.b(), value);
            break;
        case SweepAxis::Alpha:
            cfg.alpha = value;
            break;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError("trajectory." + std::string(to_string(axis)), e.what());
    }
    cfg.validate();
    return cfg;
}

std::vector<SweepRun> run_sweep(const SimulationConfig& base, SweepAxis axis, std::span<const double> values,
                                unsigned jobs)
{
    std::vector<SweepRun> runs(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        runs[i].value = values[i];

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < runs.size(); i = next++) {
            SweepRun& run = runs[i];
            try {
                run.config = with_parameter(base, axis, run.value);
                run.series = compute_observables(integrate(*run.config));
            } catch (const std::exception& e) {
                run.error = e.what();
            }
        }
    };

    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    {
        const auto count = std::min<std::size_t>(jobs, runs.size());
        std::vector<std::jthread> pool;
        pool.reserve(count);
        for (std::size_t i = 0; i < count; ++i)
            pool.emplace_back(worker);
    }
    return runs;
}

} // namespace ptbox
