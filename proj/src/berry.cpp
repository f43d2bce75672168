#include "ptbox/berry.hpp"

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

void require_loop(int n, double a, double b, double alpha)
{
    if (n < 1)
        throw std::invalid_argument("quantum number must be >= 1");
    if (!(a > b) || b < 0.0)
        throw std::invalid_argument("harmonic loop requires a > b >= 0");
    if (!(alpha > 0.0))
        throw std::invalid_argument("Robin parameter must satisfy alpha > 0");
}

// Psi_n^*(x; L) dPsi_n/dL (x; L) with Psi_n = A (sin kx + i beta cos kx), k = pi n / L, beta = k / alpha.
complex connection_density(int n, double L, double alpha, double x)
{
    const double q = pi * pi * n * n;
    const double denom = L * L * alpha * alpha + q;
    const double A = std::sqrt(L * alpha * alpha / denom);
    const double dA = alpha * alpha * (q - L * L * alpha * alpha) / (denom * denom) / (2.0 * A);

    const double k = pi * n / L;
    const double beta = k / alpha;
    const double s = std::sin(k * x);
    const double c = std::cos(k * x);
    const double kx_over_L = k * x / L;

    const complex psi = A * complex(s, beta * c);
    // d/dL sin(kx) = -(kx/L) cos(kx), d/dL cos(kx) = (kx/L) sin(kx), d beta/dL = -beta / L
    const complex dpsi = dA * complex(s, beta * c) +
                         A * complex(-kx_over_L * c, -beta / L * c + beta * kx_over_L * s);
    return std::conj(psi) * dpsi;
}

complex connection_with(const GaussLegendreRule& rule, int n, double L, double alpha)
{
    return integrate(rule, -L, L, [&](double x) { return connection_density(n, L, alpha, x); });
}

// Simpson's rule on [lo, hi] with an even number of panels.
template <class F>
complex simpson(F&& f, double lo, double hi, int panels)
{
    const double h = (hi - lo) / panels;
    complex sum = f(lo) + f(hi);
    for (int i = 1; i < panels; ++i)
        sum += (i % 2 == 1 ? 4.0 : 2.0) * f(lo + i * h);
    return sum * (h / 3.0);
}

} // namespace

std::complex<double> berry_phase_analytic(int n, double a, double b, double alpha)
{
    require_loop(n, a, b, alpha);
    const double q = pi * pi * n * n;
    const double ratio = (alpha * alpha * (a - b) * (a - b) + q) / (alpha * alpha * (a + b) * (a + b) + q);
    return {0.0, std::log(ratio)};
}

std::complex<double> berry_connection(int n, double length, double alpha, int points)
{
    if (n < 1)
        throw std::invalid_argument("quantum number must be >= 1");
    if (!(length > 0.0) || !(alpha > 0.0))
        throw std::invalid_argument("berry connection needs L > 0 and alpha > 0");
    const auto nodes = static_cast<std::size_t>(std::max(points, 4 * n + 64));
    const complex coarse = connection_with(*gauss_legendre(nodes), n, length, alpha);
    const complex fine = connection_with(*gauss_legendre(2 * nodes), n, length, alpha);
    if (std::abs(fine - coarse) > 1e-10 * std::max(1.0, std::abs(fine))) {
        std::ostringstream msg;
        msg << "berry connection quadrature did not converge for n = " << n << ", L = " << length;
        throw QuadratureError(msg.str());
    }
    return fine;
}

std::complex<double> berry_phase_numeric(int n, double a, double b, double alpha, double omega, int steps)
{
    require_loop(n, a, b, alpha);
    if (!(omega > 0.0))
        throw std::invalid_argument("harmonic loop requires omega > 0");
    if (steps < 256)
        throw std::invalid_argument("berry phase quadrature needs at least 256 steps");
    if (b == 0.0)
        return {0.0, 0.0};

    const double period = 2.0 * pi / omega;
    auto integrand = [&](double t) {
        const double L = a + b * std::cos(omega * t);
        const double speed = std::abs(b * omega * std::sin(omega * t));
        return berry_connection(n, L, alpha) * speed;
    };
    auto loop = [&](int panels) {
        const int half = panels / 2;
        return simpson(integrand, 0.0, 0.5 * period, half) + simpson(integrand, 0.5 * period, period, half);
    };

    int panels = (steps + 3) / 4 * 4;
    complex previous = loop(panels);
    for (int level = 0; level < 16; ++level) {
        panels *= 2;
        const complex current = loop(panels);
        if (std::abs(current - previous) <= 1e-10)
            return complex(0.0, 1.0) * current;
        previous = current;
    }
    throw QuadratureError("berry phase loop integral did not converge under step doubling");
}

BerryPhaseResult berry_phase(int n, double a, double b, double alpha, double omega, int steps)
{
    BerryPhaseResult out;
    out.n = n;
    out.a = a;
    out.b = b;
    out.alpha = alpha;
    out.gamma_analytic = berry_phase_analytic(n, a, b, alpha);
    out.gamma_numeric = berry_phase_numeric(n, a, b, alpha, omega, steps);
    out.discrepancy = std::abs(out.gamma_analytic - out.gamma_numeric);
    return out;
}

} // namespace ptbox
