#include "core/cube_rules.hpp"

#include <cmath>
#include <stdexcept>

namespace gmq {

QuadratureRule midpoint_rule(std::int64_t m) {
    QuadratureRule rule;
    rule.dimension = 1;
    if (m <= 0) return rule;  // I_0 convention
    rule.nodes.reserve(m);
    rule.weights.assign(m, 1.0 / static_cast<double>(m));
    for (std::int64_t i = 1; i <= m; ++i)
        rule.nodes.push_back((static_cast<double>(i) - 0.5) / static_cast<double>(m) - 0.5);
    return rule;
}

namespace {

// antiderivative of (1/4 - x^2)^4 = 1/256 - x^2/16 + 3x^4/8 - x^6 + x^8
double psi_antiderivative(double x) {
    const double x2 = x * x;
    return x * (1.0 / 256.0 +
                x2 * (-1.0 / 48.0 + x2 * (3.0 / 40.0 + x2 * (-1.0 / 7.0 + x2 / 9.0))));
}

}  // namespace

double psi(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("psi: non-finite argument");
    if (x >= 0.5) return 0.5;
    if (x <= -0.5) return -0.5;
    return 630.0 * psi_antiderivative(x);
}

double psi_prime(double x) {
    if (!std::isfinite(x))
        throw std::domain_error("psi_prime: non-finite argument");
    if (x < -0.5 || x > 0.5) return 0.0;
    const double q = 0.25 - x * x;
    const double q2 = q * q;
    return 630.0 * q2 * q2;
}

QuadratureRule transform_rule(const QuadratureRule& rule) {
    if (rule.dimension != 1)
        throw std::domain_error("transform_rule: expects a one-dimensional rule");
    return transform_rule_coordinatewise(rule);
}

QuadratureRule transform_rule_coordinatewise(const QuadratureRule& rule) {
    QuadratureRule out;
    out.dimension = rule.dimension;
    out.nodes.reserve(rule.nodes.size());
    out.weights.reserve(rule.weights.size());
    for (std::size_t i = 0; i < rule.count(); ++i) {
        double w = rule.weights[i];
        for (double c : rule.node(i)) {
            if (c < -0.5 || c > 0.5 || !std::isfinite(c))
                throw std::domain_error("transform_rule: node outside [-1/2, 1/2]");
            out.nodes.push_back(psi(c));
            w *= psi_prime(c);
        }
        out.weights.push_back(w);
    }
    return out;
}

std::int64_t fibonacci_number(int index) {
    if (index < 1)
        throw std::domain_error("fibonacci_number: index must be >= 1");
    std::int64_t a = 1, b = 1;  // F_1, F_2
    for (int i = 3; i <= index; ++i) {
        const std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return b;
}

int largest_fibonacci_index(std::int64_t m) {
    if (m < 2) return 0;
    int index = 3;
    while (fibonacci_number(index + 1) <= m) ++index;
    return index;
}

QuadratureRule fibonacci_rule(int index) {
    if (index < 3)
        throw std::domain_error("fibonacci_rule: index must be >= 3");
    const std::int64_t f = fibonacci_number(index);
    const std::int64_t g = fibonacci_number(index - 1);
    QuadratureRule rule;
    rule.dimension = 2;
    rule.nodes.reserve(2 * f);
    rule.weights.assign(f, 1.0 / static_cast<double>(f));
    for (std::int64_t i = 0; i < f; ++i) {
        rule.nodes.push_back(static_cast<double>(i) / static_cast<double>(f) - 0.5);
        rule.nodes.push_back(static_cast<double>((i * g) % f) / static_cast<double>(f) - 0.5);
    }
    return rule;
}

QuadratureRule make_cube_rule(const CubeRuleSpec& spec) {
    QuadratureRule rule;
    switch (spec.kind) {
        case CubeRuleKind::Midpoint1D:
            rule = midpoint_rule(spec.size);
            break;
        case CubeRuleKind::Fibonacci2D:
            if (spec.size > static_cast<std::int64_t>(INT32_MAX) || spec.size < 3)
                throw std::domain_error("cube rule: fibonacci index out of range");
            rule = fibonacci_rule(static_cast<int>(spec.size));
            break;
    }
    if (spec.apply_psi) rule = transform_rule_coordinatewise(rule);
    return rule;
}

int cube_rule_dimension(CubeRuleKind kind) {
    return kind == CubeRuleKind::Midpoint1D ? 1 : 2;
}

BaseRuleFactory make_base_factory(CubeRuleKind kind, bool apply_psi) {
    return [kind, apply_psi](std::int64_t m) {
        QuadratureRule rule;
        switch (kind) {
            case CubeRuleKind::Midpoint1D:
                rule = midpoint_rule(m);
                break;
            case CubeRuleKind::Fibonacci2D: {
                // largest lattice within budget; budgets below F_3 = 2 get the
                // zero quadrature
                const int index = largest_fibonacci_index(m);
                if (index >= 3) rule = fibonacci_rule(index);
                rule.dimension = 2;
                break;
            }
        }
        if (apply_psi) rule = transform_rule_coordinatewise(rule);
        return rule;
    };
}

}  // namespace gmq
