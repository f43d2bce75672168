#include "ptbox/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ptbox/quadrature.hpp"

namespace ptbox {

using std::numbers::pi;

std::vector<double> sample_times(double t_final, double interval)
{
    if (!(t_final > 0.0) || !(interval > 0.0))
        throw std::invalid_argument("sample times need t_final > 0 and interval > 0");
    std::vector<double> times;
    for (std::size_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * interval;
        if (t >= t_final * (1.0 - 1e-12)) break;
        times.push_back(t);
    }
    times.push_back(t_final);
    return times;
}

PtBoxSystem::PtBoxSystem(WallTrajectory trajectory, double alpha, int n_modes)
    : trajectory_(trajectory), alpha_(alpha), coupling_(n_modes), mode_sq_(n_modes)
{
    for (int n = 0; n < n_modes; ++n)
        mode_sq_(n) = pi * pi * n * n;
}

void PtBoxSystem::operator()(double t, const StateVector& c, StateVector& dcdt) const
{
    const double L = trajectory_.position(t);
    const double Ldot = trajectory_.velocity(t);
    const double inv_L2 = 1.0 / (L * L);

    // -i/L^2 [ diag C + V C ],  V = -i L Ldot K  =>  -i/L^2 V C = -(Ldot / L) K C
    dcdt.noalias() = (-Ldot / L) * (coupling_.weighted() * c);
    const double base = alpha_ * alpha_ * L * L;
    for (Eigen::Index n = 0; n < c.size(); ++n)
        dcdt(n) += std::complex<double>(0.0, -0.5 * (mode_sq_(n) + base) * inv_L2) * c(n);
}

StateVector PtBoxSystem::rhs(double t, const StateVector& c) const
{
    StateVector out(c.size());
    (*this)(t, c, out);
    return out;
}

StateVector rhs(double t, const ModeCoefficients& state, const SimulationConfig& config)
{
    if (state.c.size() != config.n_modes)
        throw std::invalid_argument("state size does not match n_modes");
    return PtBoxSystem(config.trajectory, config.alpha, config.n_modes).rhs(t, state.c);
}

complex reduced_wavefunction(const StateVector& c, double y)
{
    complex sum{};
    for (Eigen::Index n = 0; n < c.size(); ++n)
        sum += c(n) * neumann_mode(static_cast<int>(n), y);
    return sum;
}

complex reconstruct_wavefunction(const ModeCoefficients& state, const WallTrajectory& traj, double alpha, double x)
{
    const double L = traj.position(state.t);
    if (std::abs(x) > L * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "position x = " << x << " lies outside the box [-" << L << ", " << L << "]";
        throw std::domain_error(msg.str());
    }
    const double y = std::clamp(x / L, -1.0, 1.0);
    return std::polar(1.0, -alpha * L * y) * reduced_wavefunction(state.c, y);
}

InitialProjection project_initial_state(const InitialState& initial, double length0, double alpha, int n_modes)
{
    if (n_modes < 1)
        throw std::invalid_argument("need at least one mode");
    if (!(length0 > 0.0))
        throw std::invalid_argument("initial half-width must be > 0");

    InitialProjection out;
    out.state.t = 0.0;
    out.state.c = StateVector::Zero(n_modes);

    if (initial.kind == InitialKind::NeumannMode) {
        if (initial.index < 0 || initial.index >= n_modes)
            throw std::invalid_argument("Neumann mode index must lie in [0, n_modes)");
        out.state.c(initial.index) = 1.0;
        return out;
    }

    const int n = initial.index;
    if (n < 1)
        throw std::invalid_argument("static PT eigenstates start at n = 1");
    if (!(alpha > 0.0))
        throw std::invalid_argument("Robin parameter must satisfy alpha > 0");

    // Highest frequency in the integrand is alpha L0 + pi (n + n_modes).
    const double freq = alpha * length0 + pi * (n + n_modes);
    const auto points = static_cast<std::size_t>(std::max(256.0, 2.0 * freq + 64.0));
    const auto rule = gauss_legendre(points);

    auto psi0 = [&](double y) {
        return std::polar(1.0, alpha * length0 * y) * static_eigenfunction(n, length0, alpha, length0 * y);
    };

    std::vector<complex> samples(rule->size());
    for (std::size_t i = 0; i < rule->size(); ++i)
        samples[i] = psi0(rule->nodes[i]);

    double total = 0.0;
    for (std::size_t i = 0; i < rule->size(); ++i)
        total += rule->weights[i] * std::norm(samples[i]);

    for (int m = 0; m < n_modes; ++m) {
        complex sum{};
        for (std::size_t i = 0; i < rule->size(); ++i)
            sum += rule->weights[i] * neumann_mode(m, rule->nodes[i]) * samples[i];
        out.state.c(m) = sum;
    }
    out.truncation_residual = 1.0 - out.state.c.squaredNorm() / total;
    return out;
}

EvolutionRecord integrate_from(const SimulationConfig& config, const StateVector& initial)
{
    config.validate();
    if (initial.size() != config.n_modes)
        throw std::invalid_argument("initial state size does not match n_modes");

    const PtBoxSystem system(config.trajectory, config.alpha, config.n_modes);
    const auto times = sample_times(config.t_final, config.sample_interval);

    EvolutionRecord record;
    record.config = config;
    record.samples = sample_evolution(system, initial, times, config.step, record.diagnostics);
    return record;
}

EvolutionRecord integrate(const SimulationConfig& config)
{
    config.validate();
    const auto projection =
        project_initial_state(config.initial, config.trajectory.position(0.0), config.alpha, config.n_modes);
    auto record = integrate_from(config, projection.state.c);
    record.initial_residual = projection.truncation_residual;
    return record;
}

} // namespace ptbox
