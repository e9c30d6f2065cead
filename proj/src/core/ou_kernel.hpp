#ifndef GMQ_CORE_OU_KERNEL_HPP
#define GMQ_CORE_OU_KERNEL_HPP

namespace gmq {

// Discretization of the t-integral defining the fractional kernel k_sigma.
// The integral is split at t_split: the near part (0, t_split] is handled
// with the substitution t = u^2 (near_steps Simpson panels) after its
// closed-form leading term is taken out, the mid part [t_split, tail_cutoff]
// is integrated directly (tail_steps panels), and the asymptotic tail beyond
// tail_cutoff is added in closed form.
struct KernelQuadratureConfig {
    double t_split = 1.0;
    int near_steps = 2000;
    int tail_steps = 2000;
    double tail_cutoff = 40.0;

    void validate() const;  // throws std::domain_error when out of range
};

// Mehler kernel M_t(x,y), the integral kernel of the Ornstein-Uhlenbeck
// semigroup with respect to the Gaussian measure. Requires t > 0 (the
// kernel is singular as t -> 0+) and finite x, y.
double mehler(double t, double x, double y);

// k_sigma(x,y) = int_0^inf M_t(x,y) t^{-sigma/2-1} dt for sigma > 0, x != y.
double k_sigma(double sigma, double x, double y,
               const KernelQuadratureConfig& cfg = {});

// Gauss-Hermite estimate (>= 128 abscissas) of int M_t(x,y) H_k(y) dgamma(y).
// Equals e^{-kt} H_k(x) up to quadrature error; valid for 0 <= k <= 60.
double semigroup_project(double t, int k, double x);

}  // namespace gmq

#endif
