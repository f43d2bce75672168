#pragma once

#include <vector>

#include "ptbox/evolution.hpp"
#include "ptbox/hermitian.hpp"

namespace ptbox {

// Observables of the PT box in terms of the Neumann coefficients (slot k = mode n = k):
//
//   <E> = 1/(2L) sum_n (pi^2 n^2 + alpha^2 L^2) |C_n|^2
//   <F> = -d<E>/dL = 1/2 sum_n (pi^2 n^2 / L^2 - alpha^2) |C_n|^2
//   N   = int |Psi|^2 dx = L sum_n |C_n|^2
//   dN/dt = (Ldot + alpha) |Psi(L)|^2 + (Ldot - alpha) |Psi(-L)|^2

double average_energy(const StateVector& c, double length, double alpha);
double average_force(const StateVector& c, double length, double alpha);
double norm(const StateVector& c, double length);
double norm_rate_boundary(const ModeCoefficients& state, const WallTrajectory& traj, double alpha);

/// Re int Psi* x Psi dx / N by Gauss-Legendre quadrature of the reconstructed wavefunction.
double average_position(const ModeCoefficients& state, const WallTrajectory& traj, double alpha);

struct ObservableRow {
    double t = 0.0;
    double length = 0.0;
    double length_rate = 0.0;
    double norm = 0.0;
    double energy = 0.0;
    double energy_over_norm = 0.0;
    double force = 0.0;
    double x_avg = 0.0;
    std::vector<double> populations;
};

using ObservableSeries = std::vector<ObservableRow>;

ObservableRow observe(const ModeCoefficients& state, const WallTrajectory& traj, double alpha);
ObservableSeries compute_observables(const EvolutionRecord& record);

/// Same columns for the Dirichlet reference; populations start at mode 1.
ObservableSeries compute_observables(const HermitianRecord& record);

} // namespace ptbox
