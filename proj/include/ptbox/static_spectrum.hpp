#pragma once

#include <complex>

namespace ptbox {

using complex = std::complex<double>;

// Static box [-L, L] with PT-symmetric Robin walls  Psi' + i alpha Psi = 0  at x = +-L.
//
//   Psi_n(x) = A_n ( sin(pi n x / L) + i pi n / (L alpha) cos(pi n x / L) ),   n >= 1
//   A_n      = sqrt( L alpha^2 / (L^2 alpha^2 + pi^2 n^2) )
//   E_n      = pi^2 n^2 / (2 L^2)
//
// A_n normalizes Psi_n in the plain L2 sense: the integral of |Psi_n|^2 over [-L, L] is 1.

struct StaticEigenstate {
    int n;
    double length;
    double alpha;
    double normalization;
    double energy;
};

double static_eigenvalue(int n, double length);
double static_normalization(int n, double length, double alpha);
StaticEigenstate static_eigenstate(int n, double length, double alpha);

complex static_eigenfunction(int n, double length, double alpha, double x);
complex static_eigenfunction_derivative(int n, double length, double alpha, double x);

/// Psi_n'(side L) + i alpha Psi_n(side L), side = +1 or -1. Zero up to rounding.
complex robin_residual(int n, double length, double alpha, int side);

// Neumann basis on [-1, 1]: phi_0 = 1/sqrt(2), phi_n = cos(pi n y). Orthonormal.
double neumann_mode(int n, double y);
double neumann_mode_derivative(int n, double y);

} // namespace ptbox
