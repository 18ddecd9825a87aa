#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "attrkit/rng.hpp"
#include "attrkit/types.hpp"

namespace attrkit {

// Binary subset indicator s in {0,1}^d; bit 1 = feature retained.
struct SubsetMask {
    std::vector<std::uint8_t> bits;

    SubsetMask() = default;
    explicit SubsetMask(std::vector<std::uint8_t> b) : bits(std::move(b)) {}
    static SubsetMask zeros(int d) { return SubsetMask(std::vector<std::uint8_t>(d, 0)); }
    static SubsetMask ones(int d) { return SubsetMask(std::vector<std::uint8_t>(d, 1)); }

    int dim() const { return static_cast<int>(bits.size()); }
    int count() const;
    bool operator==(const SubsetMask& other) const { return bits == other.bits; }
    std::string to_string() const;  // "0110" style, bit 0 first
};

// Masked input: retained features copied verbatim, removed features zeroed,
// with the indicator carried alongside. Models consume the concatenation
// values ++ indicator (2d inputs), which keeps the sentinel unambiguous for
// any feature scale.
struct MaskedInstance {
    std::vector<double> values;
    SubsetMask indicator;

    // values ++ indicator as one flat 2d vector.
    std::vector<double> model_input() const;
};

MaskedInstance mask(const Instance& x, const SubsetMask& s);

// Unnormalized Shapley kernel weight for any subset of size k,
// (d-1) / (C(d,k) * k * (d-k)); k in {0, d} is rejected (the weight
// diverges there; the solver handles those subsets as hard constraints).
double shapley_kernel_weight(int d, int k);

// All 2^d masks in lexicographic order of the bit string (bit 0 most
// significant). Guarded at d <= 20.
std::vector<SubsetMask> enumerate_subsets(int d);

enum class SamplerKind { UniformCardinality, ShapleyKernel, FullEnumeration };

// Stateful subset sampler; single-owner. Parallel work units derive their
// own sampler via derive_seed(base_seed, unit_index).
class SubsetSampler {
public:
    SubsetSampler(SamplerKind kind, int d, std::uint64_t seed);

    SubsetMask next();
    SamplerKind kind() const { return kind_; }
    int dim() const { return d_; }

private:
    SubsetMask uniform_k_subset(int k);

    SamplerKind kind_;
    int d_;
    Rng rng_;
    std::vector<double> cardinality_cdf_;  // Shapley kernel only
    std::uint64_t enum_cursor_ = 0;        // full enumeration only
};

}  // namespace attrkit
