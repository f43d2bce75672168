#include "ptbox/coupling.hpp"

#include <boost/math/special_functions/sin_pi.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ptbox/errors.hpp"
#include "ptbox/quadrature.hpp"
#include "ptbox/static_spectrum.hpp"

namespace ptbox {

using std::numbers::pi;

namespace {

double parity(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

template <class F>
double converged_integral(F&& integrand, int points, const char* what)
{
    const auto coarse = integrate(*gauss_legendre(points), -1.0, 1.0, integrand);
    const auto fine = integrate(*gauss_legendre(2 * points), -1.0, 1.0, integrand);
    if (std::abs(fine - coarse) > 1e-10) {
        std::ostringstream msg;
        msg << what << " did not converge: " << points << " vs " << 2 * points
            << " nodes differ by " << std::abs(fine - coarse);
        throw QuadratureError(msg.str());
    }
    return fine;
}

} // namespace

double overlap_i1(int n, int m)
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("overlap indices must be >= 0");
    return 0.0;
}

double overlap_i2(int n, int m)
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("overlap indices must be >= 0");
    if (m == 0)
        return 0.0;
    if (n == 0)
        return -std::numbers::sqrt2 * parity(m) / (pi * m);
    if (n == m)
        return -1.0 / (2.0 * pi * n);
    return -parity(m + n) / (pi * (m + n)) - parity(m - n) / (pi * (m - n));
}

double quadrature_overlap(OverlapWeight weight, int n, int m, int points)
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("overlap indices must be >= 0");
    if (points < 64)
        throw std::invalid_argument("overlap quadrature needs at least 64 points");
    const int nodes = std::max(points, 4 * (n + m) + 32);
    const bool with_y = weight == OverlapWeight::Y;
    return converged_integral(
        [=](double y) {
            const double w = with_y ? y : 1.0;
            return w * neumann_mode(n, y) * boost::math::sin_pi(m * y);
        },
        nodes, "overlap quadrature");
}

double neumann_gram(int n, int m, int points)
{
    if (points < 64)
        throw std::invalid_argument("Gram quadrature needs at least 64 points");
    const int nodes = std::max(points, 4 * (n + m) + 32);
    return converged_integral([=](double y) { return neumann_mode(n, y) * neumann_mode(m, y); }, nodes,
                              "Gram quadrature");
}

OracleReport overlap_oracle_check(int n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("n_max must be >= 1");
    OracleReport report;
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 1; m <= n_max; ++m) {
            const double err = std::abs(overlap_i2(n, m) - quadrature_overlap(OverlapWeight::Y, n, m));
            if (err > report.max_i2_error) {
                report.max_i2_error = err;
                report.worst_n = n;
                report.worst_m = m;
            }
            report.max_i1_magnitude =
                std::max(report.max_i1_magnitude, std::abs(quadrature_overlap(OverlapWeight::One, n, m)));
        }
    }
    return report;
}

CouplingTable::CouplingTable(int n_modes)
{
    if (n_modes < 1)
        throw std::invalid_argument("coupling table needs at least one mode");
    i2_.resize(n_modes, n_modes);
    weighted_.resize(n_modes, n_modes);
    for (int n = 0; n < n_modes; ++n) {
        for (int m = 0; m < n_modes; ++m) {
            i2_(n, m) = overlap_i2(n, m);
            weighted_(n, m) = pi * m * i2_(n, m);
        }
    }
}

Eigen::MatrixXcd CouplingTable::assemble(double length, double length_rate, double alpha) const
{
    // The alpha * I1 term is identically zero.
    (void)alpha;
    const std::complex<double> scale(0.0, -length * length_rate);
    return scale * weighted_.cast<std::complex<double>>();
}

Eigen::MatrixXcd coupling_matrix(double length, double length_rate, double alpha, int n_modes)
{
    if (!(length > 0.0))
        throw std::invalid_argument("box half-width must be > 0");
    return CouplingTable(n_modes).assemble(length, length_rate, alpha);
}

} // namespace ptbox
