#include "attrkit/types.hpp"

#include <algorithm>
#include <cmath>

namespace attrkit {

Instance::Instance(std::vector<double> values) : features(std::move(values)) {
    if (features.empty()) throw std::invalid_argument("Instance: d must be >= 1");
    for (double v : features) {
        if (!std::isfinite(v)) throw std::invalid_argument("Instance: non-finite feature value");
    }
}

Label::Label(int v, int k) : value(v), num_classes(k) {
    if (k < 2) throw std::invalid_argument("Label: K must be >= 2");
    if (v < 0 || v >= k) throw std::invalid_argument("Label: class out of range");
}

void Dataset::validate() const {
    if (instances.size() != labels.size())
        throw std::invalid_argument("Dataset: instance/label count mismatch");
    if (num_classes < 2) throw std::invalid_argument("Dataset: K must be >= 2");
    for (const auto& x : instances) {
        if (x.dim() != d) throw std::invalid_argument("Dataset: inconsistent feature dimension");
    }
    for (int y : labels) {
        if (y < 0 || y >= num_classes) throw std::invalid_argument("Dataset: label out of range");
    }
}

ClassDistribution::ClassDistribution(std::vector<double> p) : probs(std::move(p)) {
    if (probs.size() < 2) throw std::invalid_argument("ClassDistribution: K must be >= 2");
    double total = 0.0;
    for (double v : probs) {
        if (!(v >= 0.0 && v <= 1.0 + 1e-12))
            throw std::invalid_argument("ClassDistribution: entry outside [0,1]");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("ClassDistribution: entries do not sum to 1");
}

AttributionVector::AttributionVector(std::vector<double> s) : scores(std::move(s)) {
    for (double v : scores) {
        if (!std::isfinite(v)) throw std::invalid_argument("AttributionVector: non-finite score");
    }
}

AttributionMatrix::AttributionMatrix(int dim, int k)
    : d(dim), num_classes(k), values(static_cast<std::size_t>(dim) * k, 0.0) {
    if (dim < 1 || k < 2) throw std::invalid_argument("AttributionMatrix: bad shape");
}

AttributionVector AttributionMatrix::column(int k) const {
    std::vector<double> out(d);
    for (int i = 0; i < d; ++i) out[i] = at(i, k);
    return AttributionVector(out);
}

double kl_divergence(const ClassDistribution& p, const ClassDistribution& q) {
    if (p.num_classes() != q.num_classes())
        throw std::invalid_argument("kl_divergence: dimension mismatch");
    double sum = 0.0;
    for (int i = 0; i < p.num_classes(); ++i) {
        const double pi = p[i];
        if (pi <= 0.0) continue;  // 0 * log(0/q) = 0
        if (q[i] == 0.0)
            throw std::domain_error("kl_divergence: q has a structural zero where p > 0");
        const double pc = std::max(pi, kProbFloor);
        const double qc = std::max(q[i], kProbFloor);
        sum += pi * (std::log(pc) - std::log(qc));
    }
    return std::max(sum, 0.0);
}

double log_likelihood(const ClassDistribution& p, int y) {
    if (y < 0 || y >= p.num_classes())
        throw std::invalid_argument("log_likelihood: label out of range");
    return std::log(std::max(p[y], kProbFloor));
}

int argmax_class(const ClassDistribution& p) {
    int best = 0;
    for (int i = 1; i < p.num_classes(); ++i) {
        if (p[i] > p[best]) best = i;
    }
    return best;
}

}  // namespace attrkit
