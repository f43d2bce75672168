#include "ptbox/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ptbox {

namespace {

// GSL ships precomputed tables only for a handful of orders (64, 96, 100, 128, 256, 512, 1024, ...);
// for the rest its nodes are good to about 1e-10. Two Newton steps on the Legendre recurrence
// bring every node and weight back to rounding level.
void polish(GaussLegendreRule& rule)
{
    const auto n = rule.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        double x = rule.nodes[i];
        double dp = 0.0;
        for (int iter = 0; iter < 2; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            x -= p1 / dp;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
}

std::shared_ptr<const GaussLegendreRule> build_rule(std::size_t points)
{
    gsl_integration_glfixed_table* table = gsl_integration_glfixed_table_alloc(points);
    if (table == nullptr)
        throw std::runtime_error("could not allocate Gauss-Legendre table");

    auto rule = std::make_shared<GaussLegendreRule>();
    rule->nodes.resize(points);
    rule->weights.resize(points);
    for (std::size_t i = 0; i < points; ++i)
        gsl_integration_glfixed_point(-1.0, 1.0, i, &rule->nodes[i], &rule->weights[i], table);
    gsl_integration_glfixed_table_free(table);
    polish(*rule);
    return rule;
}

} // namespace

std::shared_ptr<const GaussLegendreRule> gauss_legendre(std::size_t points)
{
    if (points == 0)
        throw std::invalid_argument("Gauss-Legendre rule needs at least one point");

    static std::mutex mutex;
    static std::map<std::size_t, std::shared_ptr<const GaussLegendreRule>> cache;

    std::lock_guard lock(mutex);
    auto& slot = cache[points];
    if (!slot)
        slot = build_rule(points);
    return slot;
}

} // namespace ptbox
