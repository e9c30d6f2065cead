#include "core/gauss_hermite.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace gmq {

GaussHermiteRule gauss_hermite(int n) {
    if (n < 1)
        throw std::domain_error("gauss_hermite: need at least one node");

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(static_cast<double>(k));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("gauss_hermite: eigen decomposition failed");

    GaussHermiteRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];          // ascending
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = v0 * v0;                        // total mass of gamma is 1
    }
    return rule;
}

}  // namespace gmq
