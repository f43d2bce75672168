#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ptbox/static_spectrum.hpp"

using namespace ptbox;
using std::numbers::pi;

TEST_CASE("static eigenvalues")
{
    CHECK(static_eigenvalue(1, pi) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(static_eigenvalue(2, 1.0) == doctest::Approx(2 * pi * pi).epsilon(1e-15));
    CHECK(static_eigenvalue(2, 1.0) == doctest::Approx(19.7392).epsilon(1e-6));
    CHECK(static_eigenvalue(3, 3.0) == doctest::Approx(pi * pi / 2).epsilon(1e-15));
    CHECK_THROWS_AS(static_eigenvalue(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(static_eigenvalue(1, 0.0), std::invalid_argument);
}

TEST_CASE("eigenvalue scaling E_n(cL) = E_n(L) / c^2")
{
    for (int n = 1; n <= 10; ++n)
        for (double L : {0.5, 1.0, 10.0})
            for (double c : {2.0, 0.5, 4.0})
                CHECK(static_eigenvalue(n, c * L) == static_eigenvalue(n, L) / (c * c));
}

TEST_CASE("static eigenfunction at special points")
{
    const double A1 = 1.0 / std::sqrt(1.0 + pi * pi);
    CHECK(static_normalization(1, 1.0, 1.0) == doctest::Approx(A1).epsilon(1e-15));

    const complex at_center = static_eigenfunction(1, 1.0, 1.0, 0.0);
    CHECK(at_center.real() == 0.0);
    CHECK(at_center.imag() == doctest::Approx(pi * A1).epsilon(1e-15));

    const complex at_half = static_eigenfunction(1, 1.0, 1.0, 0.5);
    CHECK(at_half.real() == doctest::Approx(A1).epsilon(1e-15));
    CHECK(std::abs(at_half.imag()) < 1e-16);

    const auto st = static_eigenstate(2, 3.0, 0.5);
    CHECK(st.energy == static_eigenvalue(2, 3.0));
    CHECK(st.normalization == static_normalization(2, 3.0, 0.5));
}

TEST_CASE("A_n normalizes Psi_n in the plain L2 inner product")
{
    // Regression baseline for n = 1, L = 1, alpha = 1 from the adaptive oracle: exactly 1.
    const double norm_11 =
        oracle::integral([](double x) { return std::norm(static_eigenfunction(1, 1.0, 1.0, x)); }, -1.0, 1.0);
    CHECK(norm_11 == doctest::Approx(1.0).epsilon(1e-12));

    for (int n : {1, 2, 5})
        for (double L : {0.5, 3.0, 10.0})
            for (double alpha : {0.25, 1.0, 4.0}) {
                const double value = oracle::integral(
                    [=](double x) { return std::norm(static_eigenfunction(n, L, alpha, x)); }, -L, L);
                CHECK(value == doctest::Approx(1.0).epsilon(1e-11));
            }
}

TEST_CASE("Robin residual vanishes at both walls")
{
    CHECK(std::abs(robin_residual(1, 1.0, 1.0, +1)) < 1e-12);
    CHECK(std::abs(robin_residual(2, 10.0, 0.5, -1)) < 1e-12);
    CHECK(std::abs(robin_residual(5, 3.0, 2.0, +1)) < 1e-12);

    double worst = 0.0;
    for (int n = 1; n <= 20; ++n)
        for (double L : {0.5, 1.0, 10.0})
            for (double alpha : {0.25, 1.0, 4.0})
                for (int side : {-1, 1})
                    worst = std::max(worst, std::abs(robin_residual(n, L, alpha, side)));
    CHECK(worst < 1e-12);
    CHECK_THROWS_AS(robin_residual(1, 1.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("eigenfunction derivative agrees with finite differences")
{
    for (int n : {1, 3, 7}) {
        const double L = 2.5;
        const double alpha = 0.8;
        for (double x : {-2.0, -0.3, 0.9, 2.4}) {
            const double h = 1e-5;
            const complex fd =
                (static_eigenfunction(n, L, alpha, x + h) - static_eigenfunction(n, L, alpha, x - h)) / (2 * h);
            CHECK(std::abs(fd - static_eigenfunction_derivative(n, L, alpha, x)) < 1e-7);
        }
    }
}

TEST_CASE("Neumann modes")
{
    CHECK(neumann_mode(1, 0.0) == 1.0);
    CHECK(neumann_mode(2, 1.0) == 1.0);
    CHECK(neumann_mode(3, 1.0) == -1.0);
    CHECK(neumann_mode(0, 0.3) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK_THROWS_AS(neumann_mode(-1, 0.0), std::invalid_argument);
    for (int n = 0; n <= 16; ++n) {
        CHECK(neumann_mode_derivative(n, 1.0) == 0.0);
        CHECK(neumann_mode_derivative(n, -1.0) == 0.0);
    }
}

TEST_CASE("Neumann basis is orthonormal including the constant mode")
{
    for (int n = 0; n <= 3; ++n)
        for (int m = 0; m <= 3; ++m) {
            const double gram = oracle::integral([=](double y) { return neumann_mode(n, y) * neumann_mode(m, y); },
                                                 -1.0, 1.0);
            CHECK(std::abs(gram - (n == m ? 1.0 : 0.0)) < 1e-12);
        }
}
