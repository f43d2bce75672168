#pragma once

#include <Eigen/Dense>

#include <vector>

#include "ptbox/config.hpp"
#include "ptbox/ode.hpp"
#include "ptbox/trajectory.hpp"

namespace ptbox {

// Hermitian reference: Dirichlet box [0, L(t)]. With y = x / L the wave equation is
//
//   i dPsi/dt = -1/(2 L^2) d2Psi/dy2 + i (Ldot / L) y dPsi/dy,   Psi(0) = Psi(1) = 0.
//
// The state is expanded as Psi(y, t) = L^{-1/2} sum_n C_n chi_n(y), chi_n = sqrt(2) sin(pi n y),
// so that sum |C_n|^2 is the conserved norm. Projection gives
//
//   dC_n/dt = -i pi^2 n^2 / (2 L^2) C_n + (Ldot / L) sum_m (D_nm + delta_nm / 2) C_m
//   D_nm    = int_0^1 chi_n y chi_m' dy
//
// Slot k holds mode n = k + 1.

struct HermitianConfig {
    WallTrajectory trajectory = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    int n_modes = 64;
    double t_final = 20.0;
    StepControl step{};
    int initial_mode = 1;
    double sample_interval = 0.05;

    /// Reuses trajectory, numerics and the initial mode index (a Neumann index k >= 1 maps to Dirichlet mode k).
    static HermitianConfig from(const SimulationConfig& config);

    void validate() const;
};

/// D_nm by Gauss-Legendre quadrature; cached per size.
const Eigen::MatrixXd& dirichlet_coupling(int n_modes);

/// Y_nm = int_0^1 chi_n y chi_m dy, used for <x>.
const Eigen::MatrixXd& dirichlet_position(int n_modes);

class HermitianBoxSystem {
public:
    HermitianBoxSystem(WallTrajectory trajectory, int n_modes);

    void operator()(double t, const StateVector& c, StateVector& dcdt) const;

    const WallTrajectory& trajectory() const noexcept { return trajectory_; }

private:
    WallTrajectory trajectory_;
    Eigen::MatrixXd generator_;   // D + I/2, antisymmetric
    Eigen::VectorXd mode_sq_;
};

StateVector hermitian_rhs(double t, const StateVector& c, const HermitianConfig& config);

double hermitian_energy(const StateVector& c, double length);
double hermitian_force(const StateVector& c, double length);
double hermitian_norm(const StateVector& c);
double hermitian_position(const StateVector& c, double length);

struct HermitianRecord {
    std::vector<ModeCoefficients> samples;
    HermitianConfig config;
    IntegratorDiagnostics diagnostics;
};

HermitianRecord integrate_hermitian(const HermitianConfig& config);

} // namespace ptbox
