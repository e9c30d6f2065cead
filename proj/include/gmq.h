/* gmq -- quadrature rules and worst-case integration errors for
 * Gaussian-measure integrals on R^d.
 *
 * C interface to the shared library: opaque handles plus status codes.
 * All functions are thread-safe; handles are immutable after creation and
 * may be shared across threads. On failure, a human-readable detail message
 * for the calling thread is available via gmq_last_error().
 */
#ifndef GMQ_H
#define GMQ_H

#include <stdint.h>

#if defined(_WIN32)
#  define GMQ_API __declspec(dllexport)
#else
#  define GMQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gmq_status {
    GMQ_OK = 0,
    GMQ_ERR_DOMAIN = 1,   /* argument outside the mathematical domain */
    GMQ_ERR_INVALID = 2,  /* structurally invalid input */
    GMQ_ERR_EVAL = 3,     /* evaluation failed (e.g. non-finite integrand) */
    GMQ_ERR_IO = 4,       /* file could not be written */
    GMQ_ERR_NOMEM = 5,
    GMQ_ERR_INTERNAL = 6
} gmq_status;

/* Static name of a status code. */
GMQ_API const char* gmq_status_str(gmq_status status);

/* Detail message of the last failure on this thread; valid until the next
 * failing gmq call on the same thread. Empty string if none. */
GMQ_API const char* gmq_last_error(void);

/* ---- Hermite polynomials and Gaussian density ------------------------- */

/* Writes H_0(x) .. H_max_degree(x) of the orthonormal probabilistic Hermite
 * family into out (max_degree + 1 doubles). */
GMQ_API gmq_status gmq_hermite_eval(double x, int max_degree, double* out);

/* (2 pi)^{-dim/2} exp(-|x|^2 / 2). */
GMQ_API gmq_status gmq_gaussian_density(int dim, const double* x, double* out);

/* n-point Gauss rule for the standard Gaussian measure (nodes ascending,
 * weights summing to 1); each array receives n doubles. */
GMQ_API gmq_status gmq_gauss_hermite(int n, double* nodes, double* weights);

/* ---- Mehler / fractional Ornstein-Uhlenbeck kernel --------------------- */

typedef struct gmq_kernel_cfg {
    double t_split;     /* boundary between near and tail integration */
    int near_steps;     /* panels on (0, t_split] */
    int tail_steps;     /* panels on [t_split, tail_cutoff] */
    double tail_cutoff; /* closed-form asymptotic tail beyond this point */
} gmq_kernel_cfg;

GMQ_API void gmq_kernel_cfg_default(gmq_kernel_cfg* cfg);

/* Mehler kernel M_t(x, y); requires t > 0. */
GMQ_API gmq_status gmq_mehler(double t, double x, double y, double* out);

/* k_sigma(x,y) = int_0^inf M_t(x,y) t^{-sigma/2-1} dt; requires sigma > 0
 * and x != y. cfg may be NULL for defaults. */
GMQ_API gmq_status gmq_k_sigma(double sigma, double x, double y,
                               const gmq_kernel_cfg* cfg, double* out);

/* Quadrature estimate of int M_t(x, y) H_k(y) dgamma(y); equals
 * e^{-k t} H_k(x) up to quadrature error. Valid for 0 <= k <= 60. */
GMQ_API gmq_status gmq_semigroup_project(double t, int k, double x, double* out);

/* ---- Base rules on the centered unit cube ------------------------------ */

/* psi change-of-variable map on [-1/2, 1/2] (clamped outside) and its
 * derivative. */
GMQ_API double gmq_psi(double x);
GMQ_API double gmq_psi_prime(double x);

typedef struct gmq_rule gmq_rule; /* opaque quadrature rule */

typedef enum gmq_base_kind {
    GMQ_BASE_MIDPOINT = 0,  /* d = 1 */
    GMQ_BASE_FIBONACCI = 1  /* d = 2 */
} gmq_base_kind;

/* m-point midpoint rule on [-1/2, 1/2]; m = 0 yields the empty rule. */
GMQ_API gmq_status gmq_rule_midpoint(int64_t m, gmq_rule** out);

/* Fibonacci lattice rule on [-1/2, 1/2]^2 with F_index nodes; index >= 3. */
GMQ_API gmq_status gmq_rule_fibonacci(int index, gmq_rule** out);

/* Coordinate-wise psi transform: nodes psi(x), weights scaled by psi'. */
GMQ_API gmq_status gmq_rule_transform_psi(const gmq_rule* rule, gmq_rule** out);

/* ---- Assembly on R^d ---------------------------------------------------- */

typedef struct gmq_assembly_params {
    int dim;
    double a;           /* target main rate (usually the smoothness s) */
    double delta;
    int64_t n_budget;   /* total node budget n */
    double varrho_tol;  /* series truncation threshold, e.g. 1e-16 */
} gmq_assembly_params;

GMQ_API void gmq_assembly_params_default(gmq_assembly_params* params);

/* Normalizer of the per-cube budget series. */
GMQ_API gmq_status gmq_varrho(double delta, double a, int dim, double tol,
                              double* out);

/* Shell radius sqrt(2 a log(n) / delta); requires n >= 2. */
GMQ_API gmq_status gmq_xi(int64_t n, double delta, double a, double* out);

/* Builds the assembled rule on R^d from shifted, Gaussian-reweighted copies
 * of the selected base rule. The node count never exceeds n_budget. */
GMQ_API gmq_status gmq_rule_assemble(const gmq_assembly_params* params,
                                     gmq_base_kind base, int apply_psi,
                                     gmq_rule** out);

/* ---- Rule access -------------------------------------------------------- */

GMQ_API void gmq_rule_free(gmq_rule* rule);
GMQ_API int gmq_rule_dim(const gmq_rule* rule);
GMQ_API int64_t gmq_rule_size(const gmq_rule* rule);

/* Copies node i into coords (dim doubles) and its weight into weight;
 * either pointer may be NULL. */
GMQ_API gmq_status gmq_rule_node(const gmq_rule* rule, int64_t i,
                                 double* coords, double* weight);

/* Compensated sum of the weights. */
GMQ_API double gmq_rule_weight_sum(const gmq_rule* rule);

/* CSV with header dim,x1[,...,xd],weight; 17 significant digits. */
GMQ_API gmq_status gmq_rule_write_csv(const gmq_rule* rule, const char* path);

/* ---- Integration and worst-case error ----------------------------------- */

typedef double (*gmq_integrand)(const double* x, int dim, void* user);

/* Weighted sum of f over the nodes; the empty rule integrates to 0. */
GMQ_API gmq_status gmq_integrate(const gmq_rule* rule, gmq_integrand f,
                                 void* user, double* out);

/* Worst-case error over the unit ball of the Hermite space H^s (d = 1),
 * with the Hermite expansion truncated at degree m. Requires s > 1/2. */
GMQ_API gmq_status gmq_wce_1d(const gmq_rule* rule, double s, int64_t m,
                              double* out);

/* Multivariate worst-case error with hyperbolic-cross truncation
 * prod_j (k_j + 1) <= cap; coincides with gmq_wce_1d for d = 1, cap = m+1. */
GMQ_API gmq_status gmq_wce_md(const gmq_rule* rule, double s, int64_t cap,
                              double* out);

/* Least-squares slope of log(err) against log(n); count >= 3, n strictly
 * increasing, err positive. */
GMQ_API gmq_status gmq_rate_fit(const int64_t* n, const double* err, int count,
                                double* slope);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GMQ_H */
