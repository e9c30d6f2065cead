#ifndef GMQ_CORE_ASSEMBLY_HPP
#define GMQ_CORE_ASSEMBLY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "core/cube_rules.hpp"
#include "core/rule.hpp"

namespace gmq {

// Parameters of the R^d assembly: a node budget n is spread over
// integer-shifted unit cubes with per-cube budgets decaying like
// exp(-(delta/2a)|k|^2).
struct AssemblyParams {
    int dimension = 1;
    double a = 1.0;           // target main rate; callers usually set a = s
    double delta = 1.0;
    std::int64_t n_budget = 2;
    double varrho_tol = 1e-16;

    void validate() const;  // throws std::domain_error when out of range
};

// Per-cube budgets n_k for all integer shifts with Euclidean |k| < xi,
// entries in lexicographic key order (zero budgets retained).
struct Allocation {
    std::vector<std::pair<std::vector<int>, std::int64_t>> entries;
    double xi = 0.0;
    double varrho = 1.0;

    std::int64_t total() const;
};

// Normalizer 1 / sum_{j>=0} [(2j+1)^d - (2j-1)^d] e^{-(delta/2a) j^2},
// series truncated once a term drops below tol * partial sum.
double varrho(double delta, double a, int dimension, double tol);

// Shell radius sqrt(2 a log(n) / delta); requires n >= 2.
double xi(std::int64_t n, double delta, double a);

// n_k = floor(varrho * n * exp(-(delta/2a)|k|^2)) over the |k| < xi range.
// Budgets below 2 nodes (n_budget < 2) give an empty allocation.
Allocation allocate(const AssemblyParams& params);

// Assembles the global rule: for each cube k with n_k >= 1 the factory is
// asked for a rule with at most n_k nodes, whose nodes are shifted by k and
// whose weights are scaled by the Gaussian density at the shifted node.
// Cubes are concatenated in lexicographic k order.
QuadratureRule assemble(const BaseRuleFactory& base, const AssemblyParams& params);

// Weighted sum of f over the nodes; the empty rule integrates to 0.
// A non-finite f value raises std::runtime_error naming the node.
double integrate(const QuadratureRule& rule,
                 const std::function<double(std::span<const double>)>& f);

}  // namespace gmq

#endif
