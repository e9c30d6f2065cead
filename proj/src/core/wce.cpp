#include "core/wce.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gmq {

namespace {

void check_wce_args(const QuadratureRule& rule, double s, std::int64_t m) {
    if (!(s > 0.5))
        throw std::domain_error("wce: requires s > 1/2");
    if (m < 1)
        throw std::domain_error("wce: truncation degree must be >= 1");
    rule.validate();
}

struct RecurrenceTables {
    std::vector<double> sqrt_k;      // sqrt(k)
    std::vector<double> inv_sqrt_k;  // 1/sqrt(k)

    explicit RecurrenceTables(std::int64_t max_degree)
        : sqrt_k(max_degree + 1), inv_sqrt_k(max_degree + 1) {
        sqrt_k[0] = 0.0;
        inv_sqrt_k[0] = 0.0;
        for (std::int64_t k = 1; k <= max_degree; ++k) {
            sqrt_k[k] = std::sqrt(static_cast<double>(k));
            inv_sqrt_k[k] = 1.0 / sqrt_k[k];
        }
    }
};

}  // namespace

double wce_1d(const QuadratureRule& rule, double s, std::int64_t m) {
    if (rule.dimension != 1)
        throw std::domain_error("wce_1d: expects a one-dimensional rule");
    check_wce_args(rule, s, m);

    const RecurrenceTables tab(m);
    std::vector<double> acc(m + 1, 0.0);  // acc[k] = sum_i w_i H_k(x_i)
    for (std::size_t i = 0; i < rule.count(); ++i) {
        const double x = rule.nodes[i];
        const double w = rule.weights[i];
        double h_prev = 1.0;
        acc[0] += w;
        if (m >= 1) {
            double h_cur = x;
            acc[1] += w * h_cur;
            for (std::int64_t k = 2; k <= m; ++k) {
                const double h_next = (x * h_cur - tab.sqrt_k[k - 1] * h_prev) * tab.inv_sqrt_k[k];
                h_prev = h_cur;
                h_cur = h_next;
                acc[k] += w * h_cur;
            }
        }
    }

    const double defect = 1.0 - acc[0];
    double err2 = defect * defect;
    for (std::int64_t k = 1; k <= m; ++k) {
        const double weight = std::pow(static_cast<double>(k) + 1.0, -s);
        err2 += weight * (acc[k] * acc[k]);
    }
    return std::sqrt(err2);
}

HyperbolicCrossIndexSet hyperbolic_cross(int dimension, std::int64_t cap) {
    if (dimension < 1)
        throw std::domain_error("hyperbolic_cross: dimension must be >= 1");
    if (cap < 1)
        throw std::domain_error("hyperbolic_cross: cap must be >= 1");

    HyperbolicCrossIndexSet set;
    set.dimension = dimension;
    set.cap = cap;
    std::vector<int> index(dimension, 0);
    // lexicographic descent: extend coordinate by coordinate while the
    // degree-weight product stays within the cap
    auto recurse = [&](auto&& self, int axis, std::int64_t product) -> void {
        if (axis == dimension) {
            set.indices.push_back(index);
            return;
        }
        for (std::int64_t k = 0; product * (k + 1) <= cap; ++k) {
            index[axis] = static_cast<int>(k);
            self(self, axis + 1, product * (k + 1));
        }
        index[axis] = 0;
    };
    recurse(recurse, 0, 1);
    set.indices.erase(set.indices.begin());  // drop the zero vector
    return set;
}

double wce_md(const QuadratureRule& rule, double s, std::int64_t cap) {
    check_wce_args(rule, s, cap);
    const int d = rule.dimension;
    const std::int64_t max_degree = cap - 1;
    const HyperbolicCrossIndexSet cross = hyperbolic_cross(d, cap);

    const RecurrenceTables tab(std::max<std::int64_t>(max_degree, 1));
    std::vector<double> values(static_cast<std::size_t>(d) * (max_degree + 1));
    std::vector<double> acc(cross.indices.size(), 0.0);
    double acc0 = 0.0;

    for (std::size_t i = 0; i < rule.count(); ++i) {
        const auto node = rule.node(i);
        const double w = rule.weights[i];
        for (int j = 0; j < d; ++j) {
            double* h = values.data() + static_cast<std::size_t>(j) * (max_degree + 1);
            const double x = node[j];
            h[0] = 1.0;
            if (max_degree >= 1) {
                h[1] = x;
                for (std::int64_t k = 2; k <= max_degree; ++k)
                    h[k] = (x * h[k - 1] - tab.sqrt_k[k - 1] * h[k - 2]) * tab.inv_sqrt_k[k];
            }
        }
        acc0 += w;
        for (std::size_t idx = 0; idx < cross.indices.size(); ++idx) {
            double p = w;
            const std::vector<int>& k = cross.indices[idx];
            for (int j = 0; j < d; ++j)
                p = p * values[static_cast<std::size_t>(j) * (max_degree + 1) + k[j]];
            acc[idx] += p;
        }
    }

    const double defect = 1.0 - acc0;
    double err2 = defect * defect;
    for (std::size_t idx = 0; idx < cross.indices.size(); ++idx) {
        double weight = 1.0;
        for (int kj : cross.indices[idx])
            weight = weight * std::pow(static_cast<double>(kj) + 1.0, -s);
        err2 += weight * (acc[idx] * acc[idx]);
    }
    return std::sqrt(err2);
}

void write_error_csv(const std::vector<ErrorReport>& rows, std::ostream& out) {
    out << "n_requested,n_actual,s,m,err\n";
    char buf[96];
    for (const ErrorReport& row : rows) {
        std::snprintf(buf, sizeof buf, "%lld,%lld,%.17g,%lld,%.17g\n",
                      static_cast<long long>(row.n_requested),
                      static_cast<long long>(row.n_actual), row.s,
                      static_cast<long long>(row.m), row.err);
        out << buf;
    }
}

double rate_fit(const std::vector<std::pair<std::int64_t, double>>& samples) {
    if (samples.size() < 3)
        throw std::domain_error("rate_fit: needs at least 3 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].first < 1 || (i > 0 && samples[i].first <= samples[i - 1].first))
            throw std::domain_error("rate_fit: n must be strictly increasing");
        if (!(samples[i].second > 0.0))
            throw std::domain_error("rate_fit: errors must be positive");
    }
    const double count = static_cast<double>(samples.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [n, err] : samples) {
        mx += std::log(static_cast<double>(n));
        my += std::log(err);
    }
    mx /= count;
    my /= count;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [n, err] : samples) {
        const double dx = std::log(static_cast<double>(n)) - mx;
        sxy += dx * (std::log(err) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace gmq
