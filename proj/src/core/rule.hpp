#ifndef GMQ_CORE_RULE_HPP
#define GMQ_CORE_RULE_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gmq {

// Finite list of d-dimensional nodes with matched weights. Nodes are stored
// flat, d doubles per node. A rule may be empty (the zero quadrature) and
// duplicate nodes are allowed.
struct QuadratureRule {
    int dimension = 1;
    std::vector<double> nodes;    // size() == count() * dimension
    std::vector<double> weights;  // size() == count()

    std::size_t count() const { return weights.size(); }
    std::span<const double> node(std::size_t i) const {
        return {nodes.data() + i * static_cast<std::size_t>(dimension),
                static_cast<std::size_t>(dimension)};
    }
    void push(std::span<const double> coords, double weight);

    // Compensated sum of the weights.
    double weight_sum() const;

    // Checks count/size consistency and finiteness; throws std::invalid_argument.
    void validate() const;
};

// CSV with header dim,x1[,...,xd],weight and 17-significant-digit decimals,
// one node per row.
void write_rule_csv(const QuadratureRule& rule, std::ostream& out);
void write_rule_csv(const QuadratureRule& rule, const std::string& path);

}  // namespace gmq

#endif
