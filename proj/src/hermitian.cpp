#include "ptbox/hermitian.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "ptbox/quadrature.hpp"

namespace ptbox {

using std::numbers::pi;

HermitianConfig HermitianConfig::from(const SimulationConfig& config)
{
    HermitianConfig out;
    out.trajectory = config.trajectory;
    out.n_modes = config.n_modes;
    out.t_final = config.t_final;
    out.step = config.step;
    out.initial_mode = config.initial.index;
    out.sample_interval = config.sample_interval;
    return out;
}

void HermitianConfig::validate() const
{
    if (n_modes < 1)
        throw ConfigError("numerics.n_modes", "need at least one mode");
    if (!(t_final > 0.0))
        throw ConfigError("numerics.t_final", "must be > 0");
    if (!(sample_interval > 0.0) || sample_interval > t_final)
        throw ConfigError("numerics.sample_interval", "must satisfy 0 < sample_interval <= t_final");
    if (!(step.dt > 0.0))
        throw ConfigError("numerics.dt", "must be > 0");
    if (initial_mode < 1 || initial_mode > n_modes)
        throw ConfigError("initial.index", "Dirichlet modes are numbered 1..n_modes");
    const std::array<double, 2> probe{0.5 * t_final, t_final};
    if (!check_pt_symmetry(trajectory, probe))
        throw ConfigError("trajectory.kind", "wall law is not even in t");
    try {
        validate_horizon(trajectory, t_final, std::min(step.dt, t_final / 1e4));
    } catch (const TrajectoryError& e) {
        throw ConfigError("numerics.t_final", e.what());
    }
}

namespace {

enum class Table { Coupling, Position };

Eigen::MatrixXd build_table(Table which, int n_modes)
{
    const auto rule = gauss_legendre(static_cast<std::size_t>(8 * n_modes + 64));
    Eigen::MatrixXd out(n_modes, n_modes);
    for (int i = 0; i < n_modes; ++i) {
        const int n = i + 1;
        for (int j = 0; j < n_modes; ++j) {
            const int m = j + 1;
            out(i, j) = integrate(*rule, 0.0, 1.0, [=](double y) {
                const double chi_n = std::numbers::sqrt2 * std::sin(pi * n * y);
                if (which == Table::Position)
                    return chi_n * y * std::numbers::sqrt2 * std::sin(pi * m * y);
                return chi_n * y * std::numbers::sqrt2 * pi * m * std::cos(pi * m * y);
            });
        }
    }
    return out;
}

const Eigen::MatrixXd& cached_table(Table which, int n_modes)
{
    if (n_modes < 1)
        throw std::invalid_argument("need at least one mode");
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<const Eigen::MatrixXd>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{static_cast<int>(which), n_modes}];
    if (!slot)
        slot = std::make_unique<const Eigen::MatrixXd>(build_table(which, n_modes));
    return *slot;
}

} // namespace

const Eigen::MatrixXd& dirichlet_coupling(int n_modes) { return cached_table(Table::Coupling, n_modes); }
const Eigen::MatrixXd& dirichlet_position(int n_modes) { return cached_table(Table::Position, n_modes); }

HermitianBoxSystem::HermitianBoxSystem(WallTrajectory trajectory, int n_modes)
    : trajectory_(trajectory),
      generator_(dirichlet_coupling(n_modes) + 0.5 * Eigen::MatrixXd::Identity(n_modes, n_modes)),
      mode_sq_(n_modes)
{
    for (int k = 0; k < n_modes; ++k)
        mode_sq_(k) = pi * pi * (k + 1.0) * (k + 1.0);
}

void HermitianBoxSystem::operator()(double t, const StateVector& c, StateVector& dcdt) const
{
    const double L = trajectory_.position(t);
    const double Ldot = trajectory_.velocity(t);
    dcdt.noalias() = (Ldot / L) * (generator_ * c);
    const double inv_2L2 = 0.5 / (L * L);
    for (Eigen::Index k = 0; k < c.size(); ++k)
        dcdt(k) += std::complex<double>(0.0, -mode_sq_(k) * inv_2L2) * c(k);
}

StateVector hermitian_rhs(double t, const StateVector& c, const HermitianConfig& config)
{
    if (c.size() != config.n_modes)
        throw std::invalid_argument("state size does not match n_modes");
    HermitianBoxSystem system(config.trajectory, config.n_modes);
    StateVector out(c.size());
    system(t, c, out);
    return out;
}

double hermitian_energy(const StateVector& c, double length)
{
    double sum = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        const double n = static_cast<double>(k + 1);
        sum += pi * pi * n * n * std::norm(c(k));
    }
    return sum / (2.0 * length * length);
}

double hermitian_force(const StateVector& c, double length)
{
    return 2.0 * hermitian_energy(c, length) / length;
}

double hermitian_norm(const StateVector& c) { return c.squaredNorm(); }

double hermitian_position(const StateVector& c, double length)
{
    const double N = c.squaredNorm();
    if (N == 0.0) return 0.0;
    const auto& Y = dirichlet_position(static_cast<int>(c.size()));
    return length * (c.adjoint() * Y.cast<std::complex<double>>() * c)(0).real() / N;
}

HermitianRecord integrate_hermitian(const HermitianConfig& config)
{
    config.validate();
    const HermitianBoxSystem system(config.trajectory, config.n_modes);
    StateVector c0 = StateVector::Zero(config.n_modes);
    c0(config.initial_mode - 1) = 1.0;
    HermitianRecord record;
    record.config = config;
    record.samples = sample_evolution(system, c0, sample_times(config.t_final, config.sample_interval),
                                      config.step, record.diagnostics);
    return record;
}

} // namespace ptbox
