#pragma once

#include <vector>

#include "ptbox/config.hpp"
#include "ptbox/coupling.hpp"
#include "ptbox/ode.hpp"
#include "ptbox/static_spectrum.hpp"
#include "ptbox/trajectory.hpp"

namespace ptbox {

// Galerkin system for the moving PT box. After y = x / L(t) and
// Psi = exp(-i alpha L y) psi, psi obeys Neumann conditions at y = +-1 and
//
//   psi(y, t) = sum_n C_n(t) phi_n(y)
//   i L^2 dC_n/dt = (pi^2 n^2 + alpha^2 L^2) / 2 C_n + sum_m V_nm(t) C_m
//
// Slot k of the coefficient vector holds mode n = k (slot 0 is the constant mode).
class PtBoxSystem {
public:
    PtBoxSystem(WallTrajectory trajectory, double alpha, int n_modes);

    void operator()(double t, const StateVector& c, StateVector& dcdt) const;
    StateVector rhs(double t, const StateVector& c) const;

    const WallTrajectory& trajectory() const noexcept { return trajectory_; }
    double alpha() const noexcept { return alpha_; }
    int size() const noexcept { return coupling_.size(); }
    const CouplingTable& coupling() const noexcept { return coupling_; }

private:
    WallTrajectory trajectory_;
    double alpha_;
    CouplingTable coupling_;
    Eigen::VectorXd mode_sq_;   // pi^2 n^2
};

/// dC/dt for the configured system.
StateVector rhs(double t, const ModeCoefficients& state, const SimulationConfig& config);

struct InitialProjection {
    ModeCoefficients state;
    /// 1 - sum |C_m|^2 / int |psi(y, 0)|^2 dy. Zero for a pure Neumann mode.
    double truncation_residual = 0.0;
};

/// Residuals above this are worth reporting to the user.
inline constexpr double kTruncationWarning = 1e-6;

/// neumann_mode(k): unit vector on slot k. static_pt_eigenstate(n): quadrature projection of
/// psi(y, 0) = exp(i alpha L0 y) Psi_n(L0 y) onto the first n_modes Neumann modes.
InitialProjection project_initial_state(const InitialState& initial, double length0, double alpha, int n_modes);

/// Psi(x, t) = exp(-i alpha L y) sum_n C_n phi_n(y),  y = x / L(t). Throws std::domain_error for |x| > L(t).
complex reconstruct_wavefunction(const ModeCoefficients& state, const WallTrajectory& traj, double alpha, double x);

/// psi(y) = sum_n C_n phi_n(y) on the fixed domain.
complex reduced_wavefunction(const StateVector& c, double y);

struct EvolutionRecord {
    std::vector<ModeCoefficients> samples;
    SimulationConfig config;
    IntegratorDiagnostics diagnostics;
    double initial_residual = 0.0;
};

/// RK4 integration of the configured run; samples at multiples of sample_interval and at t_final.
EvolutionRecord integrate(const SimulationConfig& config);

/// Same, from an explicit initial coefficient vector.
EvolutionRecord integrate_from(const SimulationConfig& config, const StateVector& initial);

} // namespace ptbox
