#include "core/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmq {

std::vector<double> hermite_eval(double x, int max_degree) {
    if (!std::isfinite(x))
        throw std::domain_error("hermite_eval: non-finite argument");
    if (max_degree < 0)
        throw std::domain_error("hermite_eval: negative degree");

    std::vector<double> h(static_cast<std::size_t>(max_degree) + 1);
    h[0] = 1.0;
    if (max_degree >= 1) h[1] = x;
    for (int k = 1; k < max_degree; ++k)
        h[k + 1] = (x * h[k] - std::sqrt(static_cast<double>(k)) * h[k - 1]) /
                   std::sqrt(static_cast<double>(k) + 1.0);
    return h;
}

HermiteTable hermite_table(std::span<const double> points, int max_degree) {
    if (max_degree < 0)
        throw std::domain_error("hermite_table: negative degree");
    HermiteTable table;
    table.points.assign(points.begin(), points.end());
    table.max_degree = max_degree;
    table.values.resize(points.size() * (static_cast<std::size_t>(max_degree) + 1));
    double* row = table.values.data();
    for (double x : points) {
        if (!std::isfinite(x))
            throw std::domain_error("hermite_table: non-finite point");
        row[0] = 1.0;
        if (max_degree >= 1) row[1] = x;
        for (int k = 1; k < max_degree; ++k)
            row[k + 1] = (x * row[k] - std::sqrt(static_cast<double>(k)) * row[k - 1]) /
                         std::sqrt(static_cast<double>(k) + 1.0);
        row += max_degree + 1;
    }
    return table;
}

double gaussian_density(const GaussianDensityContext& ctx, std::span<const double> x) {
    if (ctx.dimension < 1)
        throw std::domain_error("gaussian_density: dimension must be >= 1");
    if (static_cast<int>(x.size()) != ctx.dimension)
        throw std::domain_error("gaussian_density: point has " + std::to_string(x.size()) +
                                " coordinates, expected " + std::to_string(ctx.dimension));
    double sq = 0.0;
    for (double c : x) {
        if (!std::isfinite(c))
            throw std::domain_error("gaussian_density: non-finite coordinate");
        sq += c * c;
    }
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::pow(two_pi, -0.5 * ctx.dimension) * std::exp(-0.5 * sq);
}

}  // namespace gmq
