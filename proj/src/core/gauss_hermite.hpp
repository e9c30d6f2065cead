#ifndef GMQ_CORE_GAUSS_HERMITE_HPP
#define GMQ_CORE_GAUSS_HERMITE_HPP

#include <vector>

namespace gmq {

// n-point Gauss quadrature for the standard Gaussian measure: nodes are the
// zeros of H_n, weights sum to 1, polynomials of degree <= 2n-1 are
// integrated exactly. Computed by Golub-Welsch on the Jacobi matrix
// (diagonal 0, off-diagonal sqrt(k)), so it does not go through the
// hermite_eval recurrence.
struct GaussHermiteRule {
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;
};

GaussHermiteRule gauss_hermite(int n);

}  // namespace gmq

#endif
