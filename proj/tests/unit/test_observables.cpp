#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "ptbox/observables.hpp"

using namespace ptbox;
using std::numbers::pi;

namespace {

StateVector unit(int n_modes, int k)
{
    StateVector c = StateVector::Zero(n_modes);
    c(k) = 1.0;
    return c;
}

StateVector random_state(std::mt19937& rng, int n_modes)
{
    std::normal_distribution<double> g;
    StateVector c(n_modes);
    for (auto& v : c) v = {g(rng), g(rng)};
    return c / c.norm();
}

} // namespace

TEST_CASE("average energy")
{
    CHECK(average_energy(unit(8, 1), 10.0, 1.0) == doctest::Approx((pi * pi + 100.0) / 20.0).epsilon(1e-15));
    CHECK(average_energy(unit(8, 1), 10.0, 1.0) == doctest::Approx(5.49348).epsilon(1e-6));
    CHECK(average_energy(StateVector::Zero(8), 10.0, 1.0) == 0.0);

    std::mt19937 rng(7);
    const StateVector c = random_state(rng, 12);
    double hermitian_form = 0.0;
    for (int n = 0; n < 12; ++n) hermitian_form += pi * pi * n * n * std::norm(c(n));
    CHECK(average_energy(c, 3.0, 0.0) == doctest::Approx(hermitian_form / 6.0).epsilon(1e-15));
}

TEST_CASE("average force")
{
    CHECK(std::abs(average_force(unit(4, 1), pi, 1.0)) < 1e-15);
    CHECK(average_force(unit(4, 1), 10.0, 1.0) == doctest::Approx((pi * pi / 100.0 - 1.0) / 2.0).epsilon(1e-15));
    CHECK(average_force(unit(4, 1), 10.0, 1.0) == doctest::Approx(-0.45065).epsilon(1e-5));
}

TEST_CASE("force equals -dE/dL at frozen populations")
{
    // Over the lengths a harmonic wall a = 10, b = 1 actually visits, a plain central
    // difference with h = 1e-4 is accurate far below 1e-8.
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector c = random_state(rng, 16);
        const double L = 9.0 + 2.0 * std::generate_canonical<double, 53>(rng);
        const double alpha = 0.25 + 2.0 * std::generate_canonical<double, 53>(rng);
        const double h = 1e-4;
        const double dE = (average_energy(c, L + h, alpha) - average_energy(c, L - h, alpha)) / (2 * h);
        CHECK(std::abs(average_force(c, L, alpha) + dE) <= 1e-8);
    }
}

TEST_CASE("force equals -dE/dL in a small box")
{
    // At L ~ 1 the h^2 / 6 third-derivative term of a central difference is ~1e-6 for N = 16,
    // so extrapolate two step sizes instead.
    std::mt19937 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector c = random_state(rng, 16);
        const double L = 0.5 + 2.0 * std::generate_canonical<double, 53>(rng);
        auto central = [&](double h) {
            return (average_energy(c, L + h, 1.3) - average_energy(c, L - h, 1.3)) / (2 * h);
        };
        const double h = 1e-3 * L;
        const double extrapolated = (4.0 * central(h / 2) - central(h)) / 3.0;
        CHECK(std::abs(average_force(c, L, 1.3) + extrapolated) <= 1e-8 * std::max(1.0, std::abs(extrapolated)));
    }
}

TEST_CASE("norm")
{
    CHECK(norm(unit(8, 1), 10.0) == 10.0);

    // Closed form L sum |C|^2 against direct integration of |Psi|^2.
    std::mt19937 rng(3);
    const auto traj = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    ModeCoefficients s{1.3, random_state(rng, 10)};
    const double L = traj.position(s.t);
    const double direct =
        oracle::integral([&](double x) { return std::norm(reconstruct_wavefunction(s, traj, 1.0, x)); }, -L, L);
    CHECK(std::abs(direct - norm(s.c, L)) < 1e-8);
}

TEST_CASE("boundary norm rate: special cases")
{
    ModeCoefficients s{0.0, unit(6, 1)};
    CHECK(std::abs(norm_rate_boundary(s, WallTrajectory::fixed(10.0), 1.0)) < 1e-14);

    std::mt19937 rng(11);
    ModeCoefficients r{0.0, random_state(rng, 6)};
    CHECK(norm_rate_boundary(r, WallTrajectory::fixed(4.0), 0.0) == 0.0);
}

TEST_CASE("boundary norm rate matches dN/dt along a harmonic run")
{
    SimulationConfig cfg;
    cfg.trajectory = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    cfg.n_modes = 32;
    cfg.t_final = 4.0;
    cfg.step.dt = 1e-3;
    cfg.sample_interval = 1e-3;
    const auto record = integrate(cfg);
    std::size_t ok = 0;
    std::size_t total = 0;
    for (std::size_t i = 1; i + 1 < record.samples.size(); ++i) {
        const auto& prev = record.samples[i - 1];
        const auto& next = record.samples[i + 1];
        const double fd = (norm(next.c, cfg.trajectory.position(next.t)) - norm(prev.c, cfg.trajectory.position(prev.t))) /
                          (next.t - prev.t);
        const double boundary = norm_rate_boundary(record.samples[i], cfg.trajectory, cfg.alpha);
        ++total;
        if (std::abs(fd - boundary) <= std::max(1e-6, 1e-3 * std::abs(fd))) ++ok;
    }
    CHECK(static_cast<double>(ok) / static_cast<double>(total) >= 0.99);
}

TEST_CASE("average position")
{
    const auto traj = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    ModeCoefficients single{0.4, unit(8, 3)};
    CHECK(std::abs(average_position(single, traj, 1.0)) < 1e-12);

    // Modes 1 and 2 mixed equally, alpha = 0, against a dense-grid oracle.
    ModeCoefficients mixed{0.0, StateVector::Zero(8)};
    mixed.c(1) = 1.0 / std::sqrt(2.0);
    mixed.c(2) = std::complex<double>(0.0, 1.0 / std::sqrt(2.0));
    const double L = traj.position(0.0);
    const double moment =
        oracle::integral([&](double x) { return x * std::norm(reconstruct_wavefunction(mixed, traj, 0.0, x)); }, -L, L);
    const double mass =
        oracle::integral([&](double x) { return std::norm(reconstruct_wavefunction(mixed, traj, 0.0, x)); }, -L, L);
    CHECK(std::abs(average_position(mixed, traj, 0.0) - moment / mass) < 1e-8);

    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        ModeCoefficients r{0.1 * i, random_state(rng, 8)};
        CHECK(std::abs(average_position(r, traj, 1.0)) <= traj.position(r.t));
    }
}

TEST_CASE("energy and force are real functions of populations only")
{
    std::mt19937 rng(9);
    StateVector c = random_state(rng, 10);
    StateVector rotated = c;
    for (int n = 0; n < 10; ++n) rotated(n) *= std::polar(1.0, 0.37 * n * n);
    CHECK(average_energy(rotated, 7.0, 1.2) == doctest::Approx(average_energy(c, 7.0, 1.2)).epsilon(1e-14));
    CHECK(average_force(rotated, 7.0, 1.2) == doctest::Approx(average_force(c, 7.0, 1.2)).epsilon(1e-14));
}

TEST_CASE("static wall run keeps energy and norm constant")
{
    SimulationConfig cfg;
    cfg.trajectory = WallTrajectory::fixed(10.0);
    cfg.n_modes = 16;
    cfg.t_final = 10.0;
    cfg.sample_interval = 0.5;
    const auto series = compute_observables(integrate(cfg));
    for (const auto& row : series) {
        CHECK(std::abs(row.energy - series.front().energy) <= 1e-10);
        CHECK(std::abs(row.norm - 10.0) <= 1e-10);
        CHECK(row.populations.size() == 16);
    }
}
