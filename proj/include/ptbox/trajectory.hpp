#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string_view>

namespace ptbox {

enum class WallKind { Static, Harmonic, Expanding, Contracting };

std::string_view to_string(WallKind kind);
WallKind wall_kind_from_string(std::string_view name);

// Half-width L(t) of the box [-L(t), L(t)]:
//   static       L = a
//   harmonic     L = a + b cos(omega t)
//   expanding    L = a + b t^2
//   contracting  L = a - b t^2
// All four laws are even in t. Objects are immutable once built.
class WallTrajectory {
public:
    WallTrajectory(WallKind kind, double a, double b = 0.0, double omega = 0.0);

    static WallTrajectory fixed(double a) { return {WallKind::Static, a}; }
    static WallTrajectory harmonic(double a, double b, double omega) { return {WallKind::Harmonic, a, b, omega}; }
    static WallTrajectory expanding(double a, double b) { return {WallKind::Expanding, a, b}; }
    static WallTrajectory contracting(double a, double b) { return {WallKind::Contracting, a, b}; }

    WallKind kind() const noexcept { return kind_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double omega() const noexcept { return omega_; }

    /// L(t). Throws TrajectoryError if the law gives L <= 0.
    double position(double t) const;
    double velocity(double t) const;
    double acceleration(double t) const;

    /// Closed-form law without the positivity check.
    double raw_position(double t) const noexcept;

    /// First t >= 0 with L(t) = 0; infinity for laws that never collapse.
    double collapse_time() const noexcept;

    friend bool operator==(const WallTrajectory&, const WallTrajectory&) = default;

private:
    WallKind kind_;
    double a_;
    double b_;
    double omega_;
};

double wall_position(const WallTrajectory& traj, double t);
double wall_velocity(const WallTrajectory& traj, double t);
double wall_acceleration(const WallTrajectory& traj, double t);

/// True iff law(t) == law(-t) exactly at every sample time.
bool check_pt_symmetry(const std::function<double(double)>& law, std::span<const double> times);
bool check_pt_symmetry(const WallTrajectory& traj, std::span<const double> times);

/// Dense scan of L(t) over [0, t_final]; throws TrajectoryError if min L <= 0.
void validate_horizon(const WallTrajectory& traj, double t_final, double scan_step);

} // namespace ptbox
