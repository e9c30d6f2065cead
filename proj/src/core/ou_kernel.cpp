#include "core/ou_kernel.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/gauss_hermite.hpp"
#include "core/hermite.hpp"

namespace gmq {

void KernelQuadratureConfig::validate() const {
    if (!(t_split > 0.0))
        throw std::domain_error("kernel config: t_split must be positive");
    if (!(tail_cutoff > t_split))
        throw std::domain_error("kernel config: tail_cutoff must exceed t_split");
    if (near_steps < 16 || tail_steps < 16)
        throw std::domain_error("kernel config: step counts must be >= 16");
}

double mehler(double t, double x, double y) {
    if (!(t > 0.0))
        throw std::domain_error("mehler: t must be positive");
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("mehler: non-finite argument");
    const double om = -std::expm1(-2.0 * t);  // 1 - e^{-2t} without cancellation
    const double e2 = std::exp(-2.0 * t);
    const double e1 = std::exp(-t);
    return std::exp(-(e2 * x * x - 2.0 * e1 * x * y + e2 * y * y) / (2.0 * om)) /
           std::sqrt(om);
}

namespace {

// 1/t - 1/sinh(t); series below the cancellation threshold
double inv_t_minus_inv_sinh(double t) {
    if (t < 0.1) {
        const double t2 = t * t;
        return t * (1.0 / 6.0 - t2 * (7.0 / 360.0 - t2 * (31.0 / 15120.0)));
    }
    return 1.0 / t - 1.0 / std::sinh(t);
}

// log of M_t(x,y) / [ e^{(x^2+y^2)/4} (2t)^{-1/2} e^{-r^2/(4t)} ]
// evaluated without cancellation; -> 0 as t -> 0.
double log_phi(double t, double ssq, double rsq) {
    const double om = -std::expm1(-2.0 * t);
    return -ssq * std::tanh(0.5 * t) / 4.0 + 0.25 * rsq * inv_t_minus_inv_sinh(t) +
           0.5 * std::log(2.0 * t / om);
}

template <class F>
double simpson(F&& f, double a, double b, int panels) {
    const int n = 2 * panels;
    const double h = (b - a) / n;
    double sum = f(a) + f(b);
    double four = 0.0, two = 0.0;
    for (int i = 1; i < n; i += 2) four += f(a + i * h);
    for (int i = 2; i < n; i += 2) two += f(a + i * h);
    return (h / 3.0) * (sum + 4.0 * four + 2.0 * two);
}

}  // namespace

double k_sigma(double sigma, double x, double y, const KernelQuadratureConfig& cfg) {
    if (!(sigma > 0.0))
        throw std::domain_error("k_sigma: sigma must be positive");
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::domain_error("k_sigma: non-finite argument");
    if (x == y)
        throw std::domain_error("k_sigma: divergent for x == y");
    cfg.validate();

    const double r = std::abs(x - y);
    const double rsq = r * r;
    const double ssq = x * x + y * y;
    const double prefactor = std::exp(0.25 * ssq);  // small-t amplitude of M_t

    // Near part (0, t_split]. The leading small-t kernel
    //   L_t = prefactor * (2t)^{-1/2} e^{-r^2/(4t)}
    // integrates in closed form against t^{-sigma/2-1} (upper incomplete
    // gamma); this term carries the r -> 0 singularity exactly. The
    // remainder M_t - L_t vanishes at t = 0 and is integrated with
    // near_steps Simpson panels in u = sqrt(t).
    const double a = 0.5 * (sigma + 1.0);
    const double xi0 = rsq / (4.0 * cfg.t_split);
    const double lead = prefactor * std::pow(2.0, sigma + 0.5) *
                        std::pow(r, -1.0 - sigma) * boost::math::tgamma(a, xi0);

    auto near_remainder = [&](double u) {
        if (u <= 0.0) return 0.0;
        const double t = u * u;
        const double ell = std::exp(-rsq / (4.0 * t)) / std::sqrt(2.0 * t);
        return 2.0 * prefactor * ell * std::expm1(log_phi(t, ssq, rsq)) *
               std::pow(u, -sigma - 1.0);
    };
    const double near = simpson(near_remainder, 0.0, std::sqrt(cfg.t_split), cfg.near_steps);

    // Mid part [t_split, tail_cutoff], directly in t.
    auto integrand = [&](double t) { return mehler(t, x, y) * std::pow(t, -0.5 * sigma - 1.0); };
    const double mid = simpson(integrand, cfg.t_split, cfg.tail_cutoff, cfg.tail_steps);

    // M_t -> 1 as t -> infinity, so the tail beyond the cutoff is
    // (2/sigma) cutoff^{-sigma/2} up to a remainder below 1e-15 of it.
    const double tail = (2.0 / sigma) * std::pow(cfg.tail_cutoff, -0.5 * sigma);

    return lead + near + mid + tail;
}

double semigroup_project(double t, int k, double x) {
    if (!(t > 0.0))
        throw std::domain_error("semigroup_project: t must be positive");
    if (k < 0 || k > 60)
        throw std::domain_error("semigroup_project: degree outside oracle range [0, 60]");
    if (!std::isfinite(x))
        throw std::domain_error("semigroup_project: non-finite argument");

    static const GaussHermiteRule rule = gauss_hermite(160);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = rule.nodes[i];
        sum += rule.weights[i] * mehler(t, x, y) * hermite_eval(y, k)[k];
    }
    return sum;
}

}  // namespace gmq
