#pragma once

#include <Eigen/Dense>

namespace ptbox {

// Overlap integrals of the Neumann basis against sin(pi m y) on [-1, 1]:
//
//   I1(n, m) = int phi_n(y)     sin(pi m y) dy   (identically zero: odd integrand)
//   I2(n, m) = int y phi_n(y)   sin(pi m y) dy
//
// For n, m >= 1:
//   I2(n, n) = -1 / (2 pi n)
//   I2(n, m) = -(-1)^(m+n) / (pi (m+n)) - (-1)^(m-n) / (pi (m-n))
// The constant mode phi_0 = 1/sqrt(2) gives I2(0, m) = -sqrt(2) (-1)^m / (pi m).
// Any m = 0 entry vanishes.

double overlap_i1(int n, int m);
double overlap_i2(int n, int m);

enum class OverlapWeight { One, Y };

/// Gauss-Legendre value of int w(y) phi_n(y) sin(pi m y) dy with at least
/// max(points, 4 (n + m) + 32) nodes. Throws QuadratureError if doubling the
/// node count moves the result by more than 1e-10.
double quadrature_overlap(OverlapWeight weight, int n, int m, int points = 256);

/// Gauss-Legendre value of int phi_n(y) phi_m(y) dy.
double neumann_gram(int n, int m, int points = 256);

struct OracleReport {
    double max_i2_error = 0.0;   // max |closed form - quadrature| over the table
    double max_i1_magnitude = 0.0;
    int worst_n = 0;
    int worst_m = 0;
};

/// Closed-form I1, I2 against quadrature for 1 <= n, m <= n_max.
OracleReport overlap_oracle_check(int n_max);

// Time-independent part of the Galerkin coupling for a basis of n_modes Neumann
// modes (slot k holds phi_k). Immutable once built.
//
//   V_nm(t) = -i L pi m (alpha I1_nm + Ldot I2_nm) = -i L Ldot pi m I2_nm
class CouplingTable {
public:
    explicit CouplingTable(int n_modes);

    int size() const noexcept { return static_cast<int>(i2_.rows()); }
    const Eigen::MatrixXd& i2() const noexcept { return i2_; }

    /// K_nm = pi m I2_nm, so that V = -i L Ldot K.
    const Eigen::MatrixXd& weighted() const noexcept { return weighted_; }

    Eigen::MatrixXcd assemble(double length, double length_rate, double alpha) const;

private:
    Eigen::MatrixXd i2_;
    Eigen::MatrixXd weighted_;
};

Eigen::MatrixXcd coupling_matrix(double length, double length_rate, double alpha, int n_modes);

} // namespace ptbox
