#include "core/rule.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "core/io_error.hpp"

namespace gmq {

void QuadratureRule::push(std::span<const double> coords, double weight) {
    nodes.insert(nodes.end(), coords.begin(), coords.end());
    weights.push_back(weight);
}

double QuadratureRule::weight_sum() const {
    double sum = 0.0, comp = 0.0;
    for (double w : weights) {
        const double yy = w - comp;
        const double tt = sum + yy;
        comp = (tt - sum) - yy;
        sum = tt;
    }
    return sum;
}

void QuadratureRule::validate() const {
    if (dimension < 1)
        throw std::invalid_argument("rule: dimension must be >= 1");
    if (nodes.size() != weights.size() * static_cast<std::size_t>(dimension))
        throw std::invalid_argument("rule: node/weight length mismatch");
    for (double v : nodes)
        if (!std::isfinite(v)) throw std::invalid_argument("rule: non-finite node");
    for (double w : weights)
        if (!std::isfinite(w)) throw std::invalid_argument("rule: non-finite weight");
}

namespace {

void format_value(std::ostream& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_rule_csv(const QuadratureRule& rule, std::ostream& out) {
    out << "dim";
    for (int j = 1; j <= rule.dimension; ++j) out << ",x" << j;
    out << ",weight\n";
    for (std::size_t i = 0; i < rule.count(); ++i) {
        out << rule.dimension;
        for (double c : rule.node(i)) {
            out << ',';
            format_value(out, c);
        }
        out << ',';
        format_value(out, rule.weights[i]);
        out << '\n';
    }
}

void write_rule_csv(const QuadratureRule& rule, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot open '" + path + "' for writing");
    write_rule_csv(rule, out);
    out.flush();
    if (!out)
        throw io_error("write to '" + path + "' failed");
}

}  // namespace gmq
