#include "ptbox/static_spectrum.hpp"

#include <boost/math/special_functions/cos_pi.hpp>
#include <boost/math/special_functions/sin_pi.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ptbox {

using std::numbers::pi;

namespace {

void require_state(int n, double length, double alpha)
{
    if (n < 1)
        throw std::invalid_argument("static PT eigenstates are indexed from n = 1");
    if (!(length > 0.0))
        throw std::invalid_argument("box half-width must be > 0");
    if (!(alpha > 0.0))
        throw std::invalid_argument("Robin parameter must satisfy alpha > 0");
}

} // namespace

double static_eigenvalue(int n, double length)
{
    if (n < 1)
        throw std::invalid_argument("static PT eigenvalues are indexed from n = 1");
    if (!(length > 0.0))
        throw std::invalid_argument("box half-width must be > 0");
    const double k = pi * n / length;
    return 0.5 * k * k;
}

double static_normalization(int n, double length, double alpha)
{
    require_state(n, length, alpha);
    const double q = pi * pi * n * n;
    return std::sqrt(length * alpha * alpha / (length * length * alpha * alpha + q));
}

StaticEigenstate static_eigenstate(int n, double length, double alpha)
{
    return {n, length, alpha, static_normalization(n, length, alpha), static_eigenvalue(n, length)};
}

complex static_eigenfunction(int n, double length, double alpha, double x)
{
    const double A = static_normalization(n, length, alpha);
    const double beta = pi * n / (length * alpha);
    const double u = n * (x / length);
    return A * complex(boost::math::sin_pi(u), beta * boost::math::cos_pi(u));
}

complex static_eigenfunction_derivative(int n, double length, double alpha, double x)
{
    const double A = static_normalization(n, length, alpha);
    const double k = pi * n / length;
    const double beta = k / alpha;
    const double u = n * (x / length);
    return A * k * complex(boost::math::cos_pi(u), -beta * boost::math::sin_pi(u));
}

complex robin_residual(int n, double length, double alpha, int side)
{
    if (side != 1 && side != -1)
        throw std::invalid_argument("side must be +1 or -1");
    const double x = side * length;
    return static_eigenfunction_derivative(n, length, alpha, x) +
           complex(0.0, alpha) * static_eigenfunction(n, length, alpha, x);
}

double neumann_mode(int n, double y)
{
    if (n < 0)
        throw std::invalid_argument("Neumann modes are indexed from n = 0");
    if (n == 0)
        return std::numbers::sqrt2 / 2.0;
    return boost::math::cos_pi(n * y);
}

double neumann_mode_derivative(int n, double y)
{
    if (n < 0)
        throw std::invalid_argument("Neumann modes are indexed from n = 0");
    if (n == 0)
        return 0.0;
    return -pi * n * boost::math::sin_pi(n * y);
}

} // namespace ptbox
