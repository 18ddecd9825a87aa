#pragma once

#include <vector>

namespace attrkit {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre nodes and weights on [a, b]; exact for polynomials of
// degree <= 2n - 1.
QuadratureRule gauss_legendre(int n, double a, double b);

// Integrate f over [a, b] with an n-point Gauss-Legendre rule.
template <typename F>
double integrate(const F& f, double a, double b, int n = 64) {
    const QuadratureRule rule = gauss_legendre(n, a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

}  // namespace attrkit
