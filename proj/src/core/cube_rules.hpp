#ifndef GMQ_CORE_CUBE_RULES_HPP
#define GMQ_CORE_CUBE_RULES_HPP

#include <cstdint>
#include <functional>

#include "core/rule.hpp"

namespace gmq {

// Base quadrature rules on the centered unit cube I^d = [-1/2, 1/2]^d.

enum class CubeRuleKind { Midpoint1D, Fibonacci2D };

// Recipe for a standalone base rule: node count m for the midpoint rule,
// Fibonacci index for the lattice.
struct CubeRuleSpec {
    CubeRuleKind kind = CubeRuleKind::Midpoint1D;
    std::int64_t size = 1;
    bool apply_psi = false;
};

// m equispaced midpoints of I with equal weights 1/m; m = 0 gives the
// empty rule.
QuadratureRule midpoint_rule(std::int64_t m);

// Change-of-variable map psi(x) = 630 * int_0^x (1/4 - xi^2)^4 dxi on I,
// clamped to +-1/2 outside; evaluated through the exact polynomial
// antiderivative. psi' vanishes to fourth order at the cube boundary.
double psi(double x);
double psi_prime(double x);

// Replaces a d=1 rule on I by nodes psi(x_i) with weights psi'(x_i) w_i.
// Throws std::domain_error for nodes outside I.
QuadratureRule transform_rule(const QuadratureRule& rule);

// Coordinate-wise psi transform of a rule on I^d (weights scaled by the
// product of psi' factors); the d-dimensional counterpart used by the
// assembly factories.
QuadratureRule transform_rule_coordinatewise(const QuadratureRule& rule);

// Fibonacci lattice rule on I^2 with F_index equal-weight nodes
//   ( i/F_index - 1/2 , frac(i F_{index-1} / F_index) - 1/2 ),
// generating vector (1, F_{index-1}). Requires index >= 3 (F_index >= 2).
QuadratureRule fibonacci_rule(int index);

std::int64_t fibonacci_number(int index);  // F_1 = F_2 = 1

// Largest index >= 3 with F_index <= m, or 0 when F_3 = 2 > m.
int largest_fibonacci_index(std::int64_t m);

QuadratureRule make_cube_rule(const CubeRuleSpec& spec);

// Factory handed to the assembly: called with a node budget m, must return
// a rule on I^d with at most m nodes.
using BaseRuleFactory = std::function<QuadratureRule(std::int64_t)>;

BaseRuleFactory make_base_factory(CubeRuleKind kind, bool apply_psi);

int cube_rule_dimension(CubeRuleKind kind);

}  // namespace gmq

#endif
