#include "ptbox/observables.hpp"

#include <cmath>
#include <numbers>

#include "ptbox/quadrature.hpp"

namespace ptbox {

using std::numbers::pi;

double average_energy(const StateVector& c, double length, double alpha)
{
    const double base = alpha * alpha * length * length;
    double sum = 0.0;
    for (Eigen::Index n = 0; n < c.size(); ++n) {
        const double nn = static_cast<double>(n);
        sum += (pi * pi * nn * nn + base) * std::norm(c(n));
    }
    return sum / (2.0 * length);
}

double average_force(const StateVector& c, double length, double alpha)
{
    const double inv_L2 = 1.0 / (length * length);
    double sum = 0.0;
    for (Eigen::Index n = 0; n < c.size(); ++n) {
        const double nn = static_cast<double>(n);
        sum += (pi * pi * nn * nn * inv_L2 - alpha * alpha) * std::norm(c(n));
    }
    return 0.5 * sum;
}

double norm(const StateVector& c, double length) { return length * c.squaredNorm(); }

double norm_rate_boundary(const ModeCoefficients& state, const WallTrajectory& traj, double alpha)
{
    const double L = traj.position(state.t);
    const double Ldot = traj.velocity(state.t);
    const double right = std::norm(reconstruct_wavefunction(state, traj, alpha, L));
    const double left = std::norm(reconstruct_wavefunction(state, traj, alpha, -L));
    return (Ldot + alpha) * right + (Ldot - alpha) * left;
}

double average_position(const ModeCoefficients& state, const WallTrajectory& traj, double alpha)
{
    const double L = traj.position(state.t);
    const auto rule = gauss_legendre(static_cast<std::size_t>(4 * state.c.size() + 64));
    double moment = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < rule->size(); ++i) {
        const double x = L * rule->nodes[i];
        const double density = std::norm(reconstruct_wavefunction(state, traj, alpha, x));
        moment += rule->weights[i] * x * density;
        mass += rule->weights[i] * density;
    }
    // Both integrals carry the same Jacobian L, which cancels.
    return mass > 0.0 ? moment / mass : 0.0;
}

ObservableRow observe(const ModeCoefficients& state, const WallTrajectory& traj, double alpha)
{
    ObservableRow row;
    row.t = state.t;
    row.length = traj.position(state.t);
    row.length_rate = traj.velocity(state.t);
    row.norm = norm(state.c, row.length);
    row.energy = average_energy(state.c, row.length, alpha);
    row.energy_over_norm = row.norm > 0.0 ? row.energy / row.norm : 0.0;
    row.force = average_force(state.c, row.length, alpha);
    row.x_avg = average_position(state, traj, alpha);
    row.populations.resize(static_cast<std::size_t>(state.c.size()));
    for (Eigen::Index n = 0; n < state.c.size(); ++n)
        row.populations[static_cast<std::size_t>(n)] = std::norm(state.c(n));
    return row;
}

ObservableSeries compute_observables(const EvolutionRecord& record)
{
    ObservableSeries series;
    series.reserve(record.samples.size());
    for (const auto& sample : record.samples)
        series.push_back(observe(sample, record.config.trajectory, record.config.alpha));
    return series;
}

ObservableSeries compute_observables(const HermitianRecord& record)
{
    ObservableSeries series;
    series.reserve(record.samples.size());
    const auto& traj = record.config.trajectory;
    for (const auto& sample : record.samples) {
        ObservableRow row;
        row.t = sample.t;
        row.length = traj.position(sample.t);
        row.length_rate = traj.velocity(sample.t);
        row.norm = hermitian_norm(sample.c);
        row.energy = hermitian_energy(sample.c, row.length);
        row.energy_over_norm = row.norm > 0.0 ? row.energy / row.norm : 0.0;
        row.force = hermitian_force(sample.c, row.length);
        row.x_avg = hermitian_position(sample.c, row.length);
        row.populations.resize(static_cast<std::size_t>(sample.c.size()));
        for (Eigen::Index k = 0; k < sample.c.size(); ++k)
            row.populations[static_cast<std::size_t>(k)] = std::norm(sample.c(k));
        series.push_back(std::move(row));
    }
    return series;
}

} // namespace ptbox
