#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "ptbox/errors.hpp"
#include "ptbox/evolution.hpp"
#include "ptbox/observables.hpp"

using namespace ptbox;
using std::numbers::pi;

namespace {

SimulationConfig static_config(int n_modes, double t_final)
{
    SimulationConfig cfg;
    cfg.trajectory = WallTrajectory::fixed(10.0);
    cfg.alpha = 1.0;
    cfg.n_modes = n_modes;
    cfg.t_final = t_final;
    cfg.sample_interval = 0.5;
    cfg.step.dt = 1e-3;
    return cfg;
}

SimulationConfig harmonic_config(int n_modes, double t_final, double dt)
{
    SimulationConfig cfg;
    cfg.trajectory = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    cfg.alpha = 1.0;
    cfg.n_modes = n_modes;
    cfg.t_final = t_final;
    cfg.sample_interval = t_final;
    cfg.step.dt = dt;
    return cfg;
}

double wrap(double phase) { return std::remainder(phase, 2.0 * pi); }

} // namespace

TEST_CASE("rhs of a static wall is diagonal")
{
    const auto cfg = static_config(8, 1.0);
    ModeCoefficients state{0.0, StateVector::Zero(8)};
    state.c(1) = 1.0;
    const auto d = rhs(0.3, state, cfg);
    CHECK(std::abs(d(1) - std::complex<double>(0.0, -(pi * pi + 100.0) / 200.0)) < 1e-15);
    for (int n = 0; n < 8; ++n)
        if (n != 1) CHECK(d(n) == std::complex<double>(0.0, 0.0));

    ModeCoefficients zero{0.0, StateVector::Zero(8)};
    CHECK(rhs(1.0, zero, harmonic_config(8, 1.0, 1e-3)).cwiseAbs().maxCoeff() == 0.0);
    CHECK_THROWS_AS(rhs(0.0, zero, static_config(9, 1.0)), std::invalid_argument);
}

TEST_CASE("alpha enters the rhs only through the uniform alpha^2/2 shift")
{
    const auto traj = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    const PtBoxSystem with_alpha(traj, 1.5, 12);
    const PtBoxSystem without_alpha(traj, 0.0, 12);
    StateVector c = StateVector::Random(12);
    const double t = 0.8;   // Ldot != 0
    const StateVector diff = with_alpha.rhs(t, c) - without_alpha.rhs(t, c);
    CHECK((diff - std::complex<double>(0.0, -0.5 * 1.5 * 1.5) * c).cwiseAbs().maxCoeff() < 1e-13);

    // With alpha = 0 the diagonal is pi^2 n^2 / (2 L^2) and the rest is the Ldot coupling.
    const double L = traj.position(t);
    const double Ldot = traj.velocity(t);
    StateVector expected = (-Ldot / L) * (without_alpha.coupling().weighted() * c);
    for (int n = 0; n < 12; ++n)
        expected(n) += std::complex<double>(0.0, -pi * pi * n * n / (2 * L * L)) * c(n);
    CHECK((without_alpha.rhs(t, c) - expected).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("static wall: amplitudes constant and phase exact")
{
    const auto record = integrate(static_config(32, 10.0));
    REQUIRE(record.samples.size() == 21);
    CHECK(record.samples.front().t == 0.0);
    CHECK(record.samples.back().t == 10.0);
    for (const auto& s : record.samples)
        for (int n = 0; n < 32; ++n)
            CHECK(std::abs(std::abs(s.c(n)) - (n == 1 ? 1.0 : 0.0)) <= 1e-10);
    const double expected = wrap(-(pi * pi + 100.0) * 10.0 / 200.0);
    CHECK(std::abs(wrap(std::arg(record.samples.back().c(1)) - expected)) < 1e-8);
    CHECK(record.diagnostics.steps_taken == 10000);
}

TEST_CASE("fixed-step RK4 converges at fourth order")
{
    auto final_state = [](double dt) { return integrate(harmonic_config(16, 2.0, dt)).samples.back().c; };
    const StateVector a = final_state(0.04);
    const StateVector b = final_state(0.02);
    const StateVector c = final_state(0.01);
    const double order = std::log2((a - b).norm() / (b - c).norm());
    MESSAGE("observed order " << order);
    CHECK(order >= 3.8);
}

TEST_CASE("adaptive step doubling agrees with fine fixed steps")
{
    auto cfg = harmonic_config(16, 2.0, 1e-3);
    const auto fixed = integrate(cfg).samples.back().c;
    cfg.step.rtol = 1e-11;
    cfg.step.dt = 0.05;
    const auto adaptive = integrate(cfg);
    CHECK((adaptive.samples.back().c - fixed).norm() < 1e-8);
    CHECK(adaptive.diagnostics.steps_taken > 0);
    CHECK(adaptive.diagnostics.max_error_estimate <= 1e-11);
}

TEST_CASE("integration is linear in the initial state")
{
    const auto cfg = harmonic_config(16, 3.0, 1e-3);
    StateVector c1 = StateVector::Zero(16);
    StateVector c2 = StateVector::Zero(16);
    c1(1) = 1.0;
    c2(2) = std::complex<double>(0.3, -0.4);
    c2(5) = 0.2;
    const auto r1 = integrate_from(cfg, c1).samples.back().c;
    const auto r2 = integrate_from(cfg, c2).samples.back().c;
    const auto r12 = integrate_from(cfg, c1 + c2).samples.back().c;
    CHECK((r12 - r1 - r2).norm() < 1e-12);
}

TEST_CASE("changing alpha only rotates the global phase")
{
    for (const auto& traj : {WallTrajectory::fixed(10.0), WallTrajectory::harmonic(10.0, 1.0, 1.0)}) {
        auto cfg = harmonic_config(16, 5.0, 1e-3);
        cfg.trajectory = traj;
        cfg.sample_interval = 1.0;
        auto other = cfg;
        other.alpha = 2.0;
        const auto a = integrate(cfg);
        const auto b = integrate(other);
        for (std::size_t i = 0; i < a.samples.size(); ++i) {
            const double t = a.samples[i].t;
            const auto rotation = std::polar(1.0, -(cfg.alpha * cfg.alpha - other.alpha * other.alpha) * t / 2.0);
            CHECK((a.samples[i].c - rotation * b.samples[i].c).norm() < 1e-9);
            CHECK((a.samples[i].c.cwiseAbs() - b.samples[i].c.cwiseAbs()).maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("static-wall RK4 run is reversible")
{
    const PtBoxSystem system(WallTrajectory::fixed(10.0), 1.0, 16);
    StateVector c = StateVector::Zero(16);
    c(1) = 1.0;
    c(3) = std::complex<double>(0.0, 0.5);
    const StateVector start = c;
    IntegratorDiagnostics diag;
    propagate_fixed(system, 0.0, 10.0, c, 1e-3, diag);
    propagate_fixed(system, 10.0, 0.0, c, 1e-3, diag);
    CHECK((c - start).norm() < 1e-8);
}

TEST_CASE("integrator aborts on non-finite state and step underflow")
{
    auto explode = [](double, const StateVector& c, StateVector& d) { d = 1e308 * c; };
    StateVector c = StateVector::Ones(2);
    IntegratorDiagnostics diag;
    CHECK_THROWS_AS(propagate_fixed(explode, 0.0, 1.0, c, 0.1, diag), IntegrationError);

    auto cfg = harmonic_config(8, 1.0, 0.1);
    cfg.step.rtol = 1e-30;
    CHECK_THROWS_AS(integrate(cfg), IntegrationError);
}

TEST_CASE("sample grid covers [0, t_final] in strictly increasing order")
{
    const auto times = sample_times(1.0, 0.3);
    REQUIRE(times.size() == 5);
    CHECK(times.front() == 0.0);
    CHECK(times[3] == doctest::Approx(0.9));
    CHECK(times.back() == 1.0);
    CHECK(sample_times(1.0, 0.25).size() == 5);
}

TEST_CASE("initial state: Neumann mode")
{
    const auto p = project_initial_state({InitialKind::NeumannMode, 1}, 10.0, 1.0, 8);
    StateVector expected = StateVector::Zero(8);
    expected(1) = 1.0;
    CHECK(p.state.c == expected);
    CHECK(p.truncation_residual == 0.0);
    CHECK_THROWS_AS(project_initial_state({InitialKind::NeumannMode, 8}, 10.0, 1.0, 8), std::invalid_argument);
    CHECK_THROWS_AS(project_initial_state({InitialKind::StaticPtEigenstate, 0}, 10.0, 1.0, 8),
                    std::invalid_argument);
}

TEST_CASE("initial state: projection of a static PT eigenstate")
{
    const double L0 = 10.0;
    const double alpha = 1.0;
    const int N = 64;
    const auto p = project_initial_state({InitialKind::StaticPtEigenstate, 1}, L0, alpha, N);

    auto psi0 = [&](double y) { return std::polar(1.0, alpha * L0 * y) * static_eigenfunction(1, L0, alpha, L0 * y); };

    // Independent projection with the adaptive oracle.
    double captured = 0.0;
    for (int m = 0; m < N; ++m) {
        const auto cm = oracle::complex_integral([&](double y) { return neumann_mode(m, y) * psi0(y); }, -1.0, 1.0);
        CHECK(std::abs(cm - p.state.c(m)) < 1e-12);
        captured += std::norm(cm);
    }
    const double total = oracle::integral([&](double y) { return std::norm(psi0(y)); }, -1.0, 1.0);
    CHECK(total == doctest::Approx(1.0 / L0).epsilon(1e-12));
    CHECK(std::abs(p.truncation_residual - (1.0 - captured / total)) < 1e-10);

    // The cosine basis only holds the even part of psi0; the odd part is what the residual reports.
    const double odd = oracle::integral([&](double y) { return std::norm(0.5 * (psi0(y) - psi0(-y))); }, -1.0, 1.0);
    MESSAGE("truncation residual " << p.truncation_residual << ", odd fraction " << odd / total);
    CHECK(p.truncation_residual >= odd / total - 1e-12);
    CHECK(p.truncation_residual > kTruncationWarning);

    // At x = 0 the odd part vanishes, so the round trip recovers Psi_1(0) up to the even-series tail.
    ModeCoefficients state = p.state;
    const auto traj = WallTrajectory::fixed(L0);
    const complex back = reconstruct_wavefunction(state, traj, alpha, 0.0);
    const complex exact = static_eigenfunction(1, L0, alpha, 0.0);
    CHECK(exact.imag() == doctest::Approx(pi * static_normalization(1, L0, alpha) / (L0 * alpha)));
    MESSAGE("round trip at x = 0: |error| = " << std::abs(back - exact));
    double tail = 0.0;
    for (int m = N; m < 4 * N; ++m)
        tail += std::abs(oracle::complex_integral([&](double y) { return neumann_mode(m, y) * psi0(y); }, -1.0, 1.0));
    CHECK(std::abs(back - exact) <= 1.01 * tail + 1e-12);
}

TEST_CASE("wavefunction reconstruction")
{
    const auto traj = WallTrajectory::harmonic(10.0, 1.0, 1.0);
    ModeCoefficients e1{0.0, StateVector::Zero(6)};
    e1.c(1) = 1.0;
    CHECK(reconstruct_wavefunction(e1, traj, 1.0, 0.0) == std::complex<double>(1.0, 0.0));
    CHECK_THROWS_AS(reconstruct_wavefunction(e1, traj, 1.0, 11.5), std::domain_error);

    ModeCoefficients s{2.3, StateVector::Random(6)};
    const double L = traj.position(s.t);
    for (double x : {-L, -3.1, 0.0, 2.2, L}) {
        const double y = x / L;
        CHECK(std::abs(reconstruct_wavefunction(s, traj, 0.7, x)) ==
              doctest::Approx(std::abs(reduced_wavefunction(s.c, y))).epsilon(1e-14));
    }
}

TEST_CASE("energy self-convergence under basis doubling")
{
    auto energy = [](int n_modes) {
        const auto record = integrate(harmonic_config(n_modes, 20.0, 1e-3));
        const auto& last = record.samples.back();
        return average_energy(last.c, record.config.trajectory.position(last.t), 1.0);
    };
    const double e16 = energy(16);
    const double e32 = energy(32);
    const double e64 = energy(64);
    MESSAGE("E(20): N=16 " << e16 << ", N=32 " << e32 << ", N=64 " << e64);
    CHECK(std::abs(e64 - e32) < std::abs(e32 - e16));
    CHECK(std::abs(e64 - e32) / std::abs(e64) < 1e-3);
}
