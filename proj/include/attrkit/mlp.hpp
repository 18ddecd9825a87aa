#pragma once

#include <cstdint>
#include <vector>

namespace attrkit {

// Minimal dense network: optional tanh hidden layer, linear output.
// Weight layout (flat, row-major): with a hidden layer it is
// W1 (hidden x in), b1, W2 (out x hidden), b2; without it, W (out x in), b.
// Shared backbone for classifiers, surrogates and amortized explainer heads.
struct TanhMlp {
    int input_dim = 0;
    int hidden_dim = 0;  // 0 = single linear layer
    int output_dim = 0;
    std::vector<double> weights;

    TanhMlp() = default;
    TanhMlp(int in, int hidden, int out);

    std::size_t num_weights() const;
    void init_uniform(std::uint64_t seed, double scale = 0.1);

    struct Workspace {
        std::vector<double> hidden;  // tanh activations
    };

    // Raw (pre-activation) outputs.
    void forward(const std::vector<double>& x, Workspace& ws, std::vector<double>& out) const;
    std::vector<double> forward(const std::vector<double>& x) const;

    // Accumulates dL/dw into grad given dL/dout; forward(x, ws, ...) must
    // have been called with the same x and ws.
    void backward(const std::vector<double>& x, const Workspace& ws,
                  const std::vector<double>& dout, std::vector<double>& grad) const;

    // dL/dx given dL/dout.
    void input_backward(const std::vector<double>& x, const Workspace& ws,
                        const std::vector<double>& dout, std::vector<double>& dx) const;
};

}  // namespace attrkit
