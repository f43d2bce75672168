#include "ptbox/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "ptbox/errors.hpp"

namespace ptbox {

std::string_view to_string(WallKind kind)
{
    switch (kind) {
    case WallKind::Static: return "static";
    case WallKind::Harmonic: return "harmonic";
    case WallKind::Expanding: return "expanding";
    case WallKind::Contracting: return "contracting";
    }
    return "unknown";
}

WallKind wall_kind_from_string(std::string_view name)
{
    if (name == "static") return WallKind::Static;
    if (name == "harmonic") return WallKind::Harmonic;
    if (name == "expanding") return WallKind::Expanding;
    if (name == "contracting") return WallKind::Contracting;
    throw std::invalid_argument("unknown trajectory kind '" + std::string(name) +
                                "' (expected static, harmonic, expanding or contracting)");
}

WallTrajectory::WallTrajectory(WallKind kind, double a, double b, double omega)
    : kind_(kind), a_(a), b_(b), omega_(omega)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(omega))
        throw std::invalid_argument("trajectory parameters must be finite");
    if (a <= 0.0)
        throw std::invalid_argument("trajectory requires a > 0");
    if (b < 0.0)
        throw std::invalid_argument("trajectory requires b >= 0");
    if (kind == WallKind::Harmonic) {
        if (!(a > b))
            throw std::invalid_argument("harmonic trajectory requires a > b so that L(t) stays positive");
        if (omega < 0.0)
            throw std::invalid_argument("harmonic trajectory requires omega >= 0");
    }
}

double WallTrajectory::raw_position(double t) const noexcept
{
    switch (kind_) {
    case WallKind::Static: return a_;
    case WallKind::Harmonic: return a_ + b_ * std::cos(omega_ * t);
    case WallKind::Expanding: return a_ + b_ * t * t;
    case WallKind::Contracting: return a_ - b_ * t * t;
    }
    return a_;
}

double WallTrajectory::position(double t) const
{
    const double L = raw_position(t);
    if (!(L > 0.0)) {
        std::ostringstream msg;
        msg << to_string(kind_) << " wall has collapsed at t = " << t << " (L = " << L << ")";
        throw TrajectoryError(msg.str());
    }
    return L;
}

double WallTrajectory::velocity(double t) const
{
    switch (kind_) {
    case WallKind::Static: return 0.0;
    case WallKind::Harmonic: return -b_ * omega_ * std::sin(omega_ * t);
    case WallKind::Expanding: return 2.0 * b_ * t;
    case WallKind::Contracting: return -2.0 * b_ * t;
    }
    return 0.0;
}

double WallTrajectory::acceleration(double t) const
{
    switch (kind_) {
    case WallKind::Static: return 0.0;
    case WallKind::Harmonic: return -b_ * omega_ * omega_ * std::cos(omega_ * t);
    case WallKind::Expanding: return 2.0 * b_;
    case WallKind::Contracting: return -2.0 * b_;
    }
    return 0.0;
}

double WallTrajectory::collapse_time() const noexcept
{
    if (kind_ == WallKind::Contracting && b_ > 0.0)
        return std::sqrt(a_ / b_);
    return std::numeric_limits<double>::infinity();
}

double wall_position(const WallTrajectory& traj, double t) { return traj.position(t); }
double wall_velocity(const WallTrajectory& traj, double t) { return traj.velocity(t); }
double wall_acceleration(const WallTrajectory& traj, double t) { return traj.acceleration(t); }

bool check_pt_symmetry(const std::function<double(double)>& law, std::span<const double> times)
{
    return std::all_of(times.begin(), times.end(), [&](double t) { return law(t) == law(-t); });
}

bool check_pt_symmetry(const WallTrajectory& traj, std::span<const double> times)
{
    return check_pt_symmetry([&traj](double t) { return traj.raw_position(t); }, times);
}

void validate_horizon(const WallTrajectory& traj, double t_final, double scan_step)
{
    if (!(scan_step > 0.0))
        throw std::invalid_argument("positivity scan step must be > 0");
    const auto count = static_cast<long long>(std::ceil(t_final / scan_step));
    for (long long i = 0; i <= count; ++i) {
        const double t = std::min(t_final, static_cast<double>(i) * scan_step);
        const double L = traj.raw_position(t);
        if (!(L > 0.0)) {
            std::ostringstream msg;
            msg << "wall collapses before t_final = " << t_final << ": L(" << t << ") = " << L;
            if (std::isfinite(traj.collapse_time()))
                msg << " (collapse time " << traj.collapse_time() << ")";
            throw TrajectoryError(msg.str());
        }
    }
}

} // namespace ptbox
