#pragma once

#include <complex>

namespace ptbox {

// Geometric phase of the static PT eigenstate Psi_n(x; L) carried around one period of
// a harmonic wall L(t) = a + b cos(omega t):
//
//   gamma_n = i int_0^T ( int_{-L}^{L} Psi_n^* dPsi_n/dL dx ) |Ldot(t)| dt
//
// with the plain (unweighted) inner product. The closed-form reference is
//
//   gamma_n = i ln[ (alpha^2 (a-b)^2 + pi^2 n^2) / (alpha^2 (a+b)^2 + pi^2 n^2) ].

struct BerryPhaseResult {
    int n = 1;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;
    std::complex<double> gamma_analytic;
    std::complex<double> gamma_numeric;
    double discrepancy = 0.0;
};

std::complex<double> berry_phase_analytic(int n, double a, double b, double alpha);

/// int_{-L}^{L} Psi_n^* dPsi_n/dL dx, derivative in closed form, x-integral by Gauss-Legendre
/// (at least max(points, 4 n + 64) nodes, checked against twice as many).
std::complex<double> berry_connection(int n, double length, double alpha, int points = 0);

/// Composite Simpson over one period with the kinks of |Ldot| at t = 0, T/2, T as panel edges.
/// `steps` (>= 256) is doubled until successive results agree within 1e-10.
std::complex<double> berry_phase_numeric(int n, double a, double b, double alpha, double omega = 1.0,
                                         int steps = 256);

BerryPhaseResult berry_phase(int n, double a, double b, double alpha, double omega = 1.0, int steps = 256);

} // namespace ptbox
