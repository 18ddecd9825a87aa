#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace attrkit {

// Global probability floor: probabilities are clamped to [kProbFloor, 1]
// before any log or KL so learned-model outputs can never produce -inf.
inline constexpr double kProbFloor = 1e-12;

// Raised when an iterative numeric procedure diverges (non-finite loss,
// degenerate system, ...). The CLI maps it to exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Feature vector x in R^d.
struct Instance {
    std::vector<double> features;

    Instance() = default;
    explicit Instance(std::vector<double> values);

    int dim() const { return static_cast<int>(features.size()); }
    double operator[](std::size_t i) const { return features[i]; }
};

// Class label in {0, ..., K-1}.
struct Label {
    int value = 0;
    int num_classes = 2;

    Label() = default;
    Label(int v, int k);
};

struct Dataset {
    std::vector<Instance> instances;
    std::vector<int> labels;
    int d = 0;
    int num_classes = 0;

    std::size_t size() const { return instances.size(); }
    void validate() const;
};

// Probability vector over K classes; entries in [0,1], sum to 1 within 1e-9.
struct ClassDistribution {
    std::vector<double> probs;

    ClassDistribution() = default;
    explicit ClassDistribution(std::vector<double> p);

    int num_classes() const { return static_cast<int>(probs.size()); }
    double operator[](std::size_t i) const { return probs[i]; }
};

// Per-feature attribution scores e(x) in R^d.
struct AttributionVector {
    std::vector<double> scores;

    AttributionVector() = default;
    explicit AttributionVector(std::vector<double> s);

    int dim() const { return static_cast<int>(scores.size()); }
    double operator[](std::size_t i) const { return scores[i]; }
};

// Per-class attribution scores, d x K.
struct AttributionMatrix {
    int d = 0;
    int num_classes = 0;
    std::vector<double> values;  // row-major, values[i * num_classes + k]

    AttributionMatrix() = default;
    AttributionMatrix(int dim, int k);

    double& at(int i, int k) { return values[static_cast<std::size_t>(i) * num_classes + k]; }
    double at(int i, int k) const { return values[static_cast<std::size_t>(i) * num_classes + k]; }
    AttributionVector column(int k) const;
};

// KL(p || q) = sum_i p_i log(p_i / q_i), with 0 log(0/q) = 0.
// q entries are clamped to kProbFloor before the log; an exact zero in q
// where p is positive is treated as structural and raises std::domain_error.
double kl_divergence(const ClassDistribution& p, const ClassDistribution& q);

// log(max(p_y, kProbFloor)); always finite.
double log_likelihood(const ClassDistribution& p, int y);

// Index of the largest probability; ties break toward the lowest class index.
int argmax_class(const ClassDistribution& p);

}  // namespace attrkit
