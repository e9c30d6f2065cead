#ifndef GMQ_CORE_HERMITE_HPP
#define GMQ_CORE_HERMITE_HPP

#include <span>
#include <vector>

namespace gmq {

// Orthonormal probabilistic Hermite polynomials H_0, H_1, ... with
//   H_0 = 1,  H_1(x) = x,  sqrt(k+1) H_{k+1}(x) = x H_k(x) - sqrt(k) H_{k-1}(x).
// The family is orthonormal with respect to the standard Gaussian measure.

// Evaluates H_0(x) .. H_max_degree(x). Throws std::domain_error for
// non-finite x.
std::vector<double> hermite_eval(double x, int max_degree);

// Values H_k(points[i]) for all points, stored row-major by point so one
// point's full degree sweep is contiguous.
struct HermiteTable {
    std::vector<double> points;
    int max_degree = 0;
    std::vector<double> values;  // size points.size() * (max_degree + 1)

    std::size_t rows() const { return points.size(); }
    std::size_t cols() const { return static_cast<std::size_t>(max_degree) + 1; }
    double operator()(std::size_t i, int k) const { return values[i * cols() + k]; }
};

HermiteTable hermite_table(std::span<const double> points, int max_degree);

// Standard Gaussian density on R^d, fixed dimension checked per call.
struct GaussianDensityContext {
    int dimension = 1;
};

// (2*pi)^{-d/2} exp(-|x|^2/2). Throws std::domain_error if x.size() does
// not match ctx.dimension or a coordinate is non-finite.
double gaussian_density(const GaussianDensityContext& ctx, std::span<const double> x);

}  // namespace gmq

#endif
