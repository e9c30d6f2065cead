#include "core/assembly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "core/hermite.hpp"

namespace gmq {

void AssemblyParams::validate() const {
    if (dimension < 1)
        throw std::domain_error("assembly: dimension must be >= 1");
    if (!(a > 0.0))
        throw std::domain_error("assembly: a must be positive");
    if (!(delta > 0.0))
        throw std::domain_error("assembly: delta must be positive");
    if (n_budget < 1)
        throw std::domain_error("assembly: n_budget must be positive");
    if (!(varrho_tol > 0.0))
        throw std::domain_error("assembly: varrho_tol must be positive");
}

std::int64_t Allocation::total() const {
    std::int64_t sum = 0;
    for (const auto& [k, nk] : entries) sum += nk;
    return sum;
}

double varrho(double delta, double a, int dimension, double tol) {
    if (!(delta > 0.0) || !(a > 0.0) || !(tol > 0.0) || dimension < 1)
        throw std::domain_error("varrho: parameters must be positive");
    const double q = delta / (2.0 * a);
    double sum = 0.0;
    for (std::int64_t j = 0;; ++j) {
        const double coef = std::pow(2.0 * j + 1.0, dimension) -
                            std::pow(2.0 * j - 1.0, dimension);
        const double term = coef * std::exp(-q * static_cast<double>(j) * j);
        sum += term;
        if (j > 0 && term < tol * sum) break;
    }
    return 1.0 / sum;
}

double xi(std::int64_t n, double delta, double a) {
    if (n < 2)
        throw std::domain_error("xi: requires n >= 2");
    if (!(delta > 0.0) || !(a > 0.0))
        throw std::domain_error("xi: parameters must be positive");
    return std::sqrt(2.0 * a * std::log(static_cast<double>(n)) / delta);
}

namespace {

double norm_sq(std::span<const int> k) {
    double s = 0.0;
    for (int c : k) s += static_cast<double>(c) * c;
    return s;
}

// lexicographic sweep of the box |k|_inf <= bound, filtered by |k| < xi
template <class Visit>
void for_each_shift(int dimension, double xi_n, Visit&& visit) {
    const int bound = static_cast<int>(std::ceil(xi_n));
    std::vector<int> k(dimension, -bound);
    if (xi_n <= 0.0) return;
    for (;;) {
        if (norm_sq(k) < xi_n * xi_n) visit(k);
        int axis = dimension - 1;
        while (axis >= 0 && k[axis] == bound) k[axis--] = -bound;
        if (axis < 0) break;
        ++k[axis];
    }
}

}  // namespace

Allocation allocate(const AssemblyParams& params) {
    params.validate();
    Allocation alloc;
    alloc.varrho = varrho(params.delta, params.a, params.dimension, params.varrho_tol);
    if (params.n_budget < 2) return alloc;  // zero quadrature, xi stays 0

    alloc.xi = xi(params.n_budget, params.delta, params.a);
    const double q = params.delta / (2.0 * params.a);
    const double scale = alloc.varrho * static_cast<double>(params.n_budget);
    for_each_shift(params.dimension, alloc.xi, [&](const std::vector<int>& k) {
        const auto nk = static_cast<std::int64_t>(std::floor(scale * std::exp(-q * norm_sq(k))));
        alloc.entries.emplace_back(k, nk);
    });
    return alloc;
}

QuadratureRule assemble(const BaseRuleFactory& base, const AssemblyParams& params) {
    const Allocation alloc = allocate(params);
    QuadratureRule rule;
    rule.dimension = params.dimension;
    const GaussianDensityContext density{params.dimension};
    std::vector<double> shifted(params.dimension);

    for (const auto& [k, nk] : alloc.entries) {
        if (nk < 1) continue;
        const QuadratureRule cube = base(nk);
        if (cube.dimension != params.dimension)
            throw std::domain_error("assemble: base rule dimension mismatch");
        if (static_cast<std::int64_t>(cube.count()) > nk)
            throw std::domain_error("assemble: base rule exceeds its node budget");
        for (std::size_t i = 0; i < cube.count(); ++i) {
            const auto node = cube.node(i);
            for (int j = 0; j < params.dimension; ++j)
                shifted[j] = node[j] + static_cast<double>(k[j]);
            rule.push(shifted, cube.weights[i] * gaussian_density(density, shifted));
        }
    }
    return rule;
}

double integrate(const QuadratureRule& rule,
                 const std::function<double(std::span<const double>)>& f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.count(); ++i) {
        const double value = f(rule.node(i));
        if (!std::isfinite(value)) {
            std::ostringstream msg;
            msg << "integrate: integrand returned non-finite value at node (";
            const auto node = rule.node(i);
            for (std::size_t j = 0; j < node.size(); ++j)
                msg << (j ? ", " : "") << node[j];
            msg << ")";
            throw std::runtime_error(msg.str());
        }
        sum += rule.weights[i] * value;
    }
    return sum;
}

}  // namespace gmq
