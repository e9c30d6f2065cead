#ifndef GMQ_CORE_WCE_HPP
#define GMQ_CORE_WCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "core/rule.hpp"

namespace gmq {

// Exact worst-case integration error over the unit ball of the Hermite
// space H^s, computed from the truncated Hermite expansion
//   err_m^2 = (1 - sum_i w_i)^2
//           + sum_{k=1}^m (k+1)^{-s} ( sum_i w_i H_k(x_i) )^2.
// Accumulation is deterministic: nodes in stored order, degrees ascending,
// one recurrence sweep per node.
double wce_1d(const QuadratureRule& rule, double s, std::int64_t m);

// Nonzero multi-degrees k in N_0^d with prod_j (k_j + 1) <= cap, enumerated
// once each in lexicographic order (ascending for d = 1).
struct HyperbolicCrossIndexSet {
    int dimension = 1;
    std::int64_t cap = 1;
    std::vector<std::vector<int>> indices;
};

HyperbolicCrossIndexSet hyperbolic_cross(int dimension, std::int64_t cap);

// d-dimensional worst-case error with hyperbolic-cross truncation
//   err^2 = (1 - sum w_i)^2
//         + sum_{k in X(d,cap)} prod_j (k_j+1)^{-s} (sum_i w_i prod_j H_{k_j}(x_ij))^2.
// For d = 1 and cap = m + 1 this reproduces wce_1d(rule, s, m) bit for bit.
double wce_md(const QuadratureRule& rule, double s, std::int64_t cap);

// One sweep row: requested budget, realized node count, smoothness,
// truncation degree and the resulting error.
struct ErrorReport {
    std::int64_t n_requested = 0;
    std::int64_t n_actual = 0;
    double s = 0.0;
    std::int64_t m = 0;
    double err = 0.0;
};

// CSV with header n_requested,n_actual,s,m,err (17 significant digits).
void write_error_csv(const std::vector<ErrorReport>& rows, std::ostream& out);

// Least-squares slope of log(err) against log(n). Requires >= 3 samples
// with strictly increasing n and positive err.
double rate_fit(const std::vector<std::pair<std::int64_t, double>>& samples);

}  // namespace gmq

#endif
