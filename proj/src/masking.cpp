#include "attrkit/masking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace attrkit {

int SubsetMask::count() const {
    int c = 0;
    for (auto b : bits) c += b;
    return c;
}

std::string SubsetMask::to_string() const {
    std::string s(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) s[i] = '1';
    }
    return s;
}

std::vector<double> MaskedInstance::model_input() const {
    std::vector<double> input(values);
    input.reserve(values.size() * 2);
    for (auto b : indicator.bits) input.push_back(static_cast<double>(b));
    return input;
}

MaskedInstance mask(const Instance& x, const SubsetMask& s) {
    if (x.dim() != s.dim()) throw std::invalid_argument("mask: length mismatch");
    MaskedInstance out;
    out.values.resize(x.dim());
    out.indicator = s;
    for (int i = 0; i < x.dim(); ++i) {
        out.values[i] = s.bits[i] ? x.features[i] : 0.0;
    }
    return out;
}

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int i = 1; i <= k; ++i) {
        result *= static_cast<double>(n - k + i) / i;
    }
    return result;
}

}  // namespace

double shapley_kernel_weight(int d, int k) {
    if (d < 2) throw std::invalid_argument("shapley_kernel_weight: d must be >= 2");
    if (k <= 0 || k >= d)
        throw std::invalid_argument("shapley_kernel_weight: k must satisfy 1 <= k <= d-1");
    return (d - 1.0) / (binomial(d, k) * k * (d - k));
}

std::vector<SubsetMask> enumerate_subsets(int d) {
    if (d < 1) throw std::invalid_argument("enumerate_subsets: d must be >= 1");
    if (d > 20) throw std::invalid_argument("enumerate_subsets: d > 20 exceeds memory guard");
    const std::uint64_t total = std::uint64_t{1} << d;
    std::vector<SubsetMask> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> bits(d);
        for (int j = 0; j < d; ++j) {
            bits[j] = static_cast<std::uint8_t>((code >> (d - 1 - j)) & 1u);
        }
        out.emplace_back(std::move(bits));
    }
    return out;
}

SubsetSampler::SubsetSampler(SamplerKind kind, int d, std::uint64_t seed)
    : kind_(kind), d_(d), rng_(seed) {
    if (d < 1) throw std::invalid_argument("SubsetSampler: d must be >= 1");
    if (kind_ == SamplerKind::ShapleyKernel) {
        if (d < 2) throw std::invalid_argument("SubsetSampler: Shapley kernel needs d >= 2");
        // P(|s| = k) proportional to C(d,k) * kernel(d,k) = (d-1)/(k(d-k)).
        cardinality_cdf_.resize(d - 1);
        double total = 0.0;
        for (int k = 1; k <= d - 1; ++k) {
            total += 1.0 / (static_cast<double>(k) * (d - k));
            cardinality_cdf_[k - 1] = total;
        }
        for (auto& v : cardinality_cdf_) v /= total;
        cardinality_cdf_.back() = 1.0;
    }
    if (kind_ == SamplerKind::FullEnumeration && d > 20)
        throw std::invalid_argument("SubsetSampler: enumeration guarded at d <= 20");
}

SubsetMask SubsetSampler::uniform_k_subset(int k) {
    std::vector<int> idx(d_);
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates: the first k entries are a uniform k-subset.
    for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng_.uniform_int(d_ - i));
        std::swap(idx[i], idx[j]);
    }
    SubsetMask s = SubsetMask::zeros(d_);
    for (int i = 0; i < k; ++i) s.bits[idx[i]] = 1;
    return s;
}

SubsetMask SubsetSampler::next() {
    switch (kind_) {
        case SamplerKind::UniformCardinality: {
            const int k = static_cast<int>(rng_.uniform_int(d_ + 1));
            return uniform_k_subset(k);
        }
        case SamplerKind::ShapleyKernel: {
            const double u = rng_.uniform();
            int k = 1;
            while (k < d_ - 1 && u > cardinality_cdf_[k - 1]) ++k;
            return uniform_k_subset(k);
        }
        case SamplerKind::FullEnumeration: {
            const std::uint64_t total = std::uint64_t{1} << d_;
            const std::uint64_t code = enum_cursor_ % total;
            ++enum_cursor_;
            std::vector<std::uint8_t> bits(d_);
            for (int j = 0; j < d_; ++j) {
                bits[j] = static_cast<std::uint8_t>((code >> (d_ - 1 - j)) & 1u);
            }
            return SubsetMask(std::move(bits));
        }
    }
    throw std::logic_error("SubsetSampler: unknown kind");
}

}  // namespace attrkit
