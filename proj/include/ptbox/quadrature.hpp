#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace ptbox {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const noexcept { return nodes.size(); }
};

/// Rules are built once per point count and shared; safe to call concurrently.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(std::size_t points);

/// Integrate f over [lo, hi]. F may return a real or complex value.
template <class F>
auto integrate(const GaussLegendreRule& rule, double lo, double hi, F&& f)
{
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    decltype(f(mid)) sum{};
    for (std::size_t i = 0; i < rule.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return sum * half;
}

} // namespace ptbox
