#include "attrkit/mlp.hpp"

#include <cmath>
#include <stdexcept>

#include "attrkit/rng.hpp"

namespace attrkit {

TanhMlp::TanhMlp(int in, int hidden, int out)
    : input_dim(in), hidden_dim(hidden), output_dim(out) {
    if (in < 1 || out < 1 || hidden < 0) throw std::invalid_argument("TanhMlp: bad shape");
    weights.assign(num_weights(), 0.0);
}

std::size_t TanhMlp::num_weights() const {
    if (hidden_dim == 0) {
        return static_cast<std::size_t>(output_dim) * (input_dim + 1);
    }
    return static_cast<std::size_t>(hidden_dim) * (input_dim + 1) +
           static_cast<std::size_t>(output_dim) * (hidden_dim + 1);
}

void TanhMlp::init_uniform(std::uint64_t seed, double scale) {
    Rng rng(seed);
    for (auto& w : weights) w = scale * (2.0 * rng.uniform() - 1.0);
}

void TanhMlp::forward(const std::vector<double>& x, Workspace& ws,
                      std::vector<double>& out) const {
    if (static_cast<int>(x.size()) != input_dim)
        throw std::invalid_argument("TanhMlp: input dimension mismatch");
    out.assign(output_dim, 0.0);
    if (hidden_dim == 0) {
        const double* w = weights.data();
        for (int k = 0; k < output_dim; ++k) {
            const double* row = w + static_cast<std::size_t>(k) * input_dim;
            double z = 0.0;
            for (int i = 0; i < input_dim; ++i) z += row[i] * x[i];
            out[k] = z + w[static_cast<std::size_t>(output_dim) * input_dim + k];
        }
        return;
    }
    const double* w1 = weights.data();
    const double* b1 = w1 + static_cast<std::size_t>(hidden_dim) * input_dim;
    const double* w2 = b1 + hidden_dim;
    const double* b2 = w2 + static_cast<std::size_t>(output_dim) * hidden_dim;

    ws.hidden.assign(hidden_dim, 0.0);
    for (int h = 0; h < hidden_dim; ++h) {
        const double* row = w1 + static_cast<std::size_t>(h) * input_dim;
        double a = b1[h];
        for (int i = 0; i < input_dim; ++i) a += row[i] * x[i];
        ws.hidden[h] = std::tanh(a);
    }
    for (int k = 0; k < output_dim; ++k) {
        const double* row = w2 + static_cast<std::size_t>(k) * hidden_dim;
        double z = b2[k];
        for (int h = 0; h < hidden_dim; ++h) z += row[h] * ws.hidden[h];
        out[k] = z;
    }
}

std::vector<double> TanhMlp::forward(const std::vector<double>& x) const {
    Workspace ws;
    std::vector<double> out;
    forward(x, ws, out);
    return out;
}

void TanhMlp::backward(const std::vector<double>& x, const Workspace& ws,
                       const std::vector<double>& dout, std::vector<double>& grad) const {
    if (grad.size() != weights.size()) grad.assign(weights.size(), 0.0);
    if (hidden_dim == 0) {
        double* gw = grad.data();
        double* gb = gw + static_cast<std::size_t>(output_dim) * input_dim;
        for (int k = 0; k < output_dim; ++k) {
            double* row = gw + static_cast<std::size_t>(k) * input_dim;
            for (int i = 0; i < input_dim; ++i) row[i] += dout[k] * x[i];
            gb[k] += dout[k];
        }
        return;
    }
    const double* w2 = weights.data() + static_cast<std::size_t>(hidden_dim) * (input_dim + 1);
    double* g1 = grad.data();
    double* gb1 = g1 + static_cast<std::size_t>(hidden_dim) * input_dim;
    double* g2 = gb1 + hidden_dim;
    double* gb2 = g2 + static_cast<std::size_t>(output_dim) * hidden_dim;

    std::vector<double> dh(hidden_dim, 0.0);
    for (int k = 0; k < output_dim; ++k) {
        const double* row = w2 + static_cast<std::size_t>(k) * hidden_dim;
        double* grow = g2 + static_cast<std::size_t>(k) * hidden_dim;
        for (int h = 0; h < hidden_dim; ++h) {
            grow[h] += dout[k] * ws.hidden[h];
            dh[h] += dout[k] * row[h];
        }
        gb2[k] += dout[k];
    }
    for (int h = 0; h < hidden_dim; ++h) {
        const double da = dh[h] * (1.0 - ws.hidden[h] * ws.hidden[h]);
        double* row = g1 + static_cast<std::size_t>(h) * input_dim;
        for (int i = 0; i < input_dim; ++i) row[i] += da * x[i];
        gb1[h] += da;
    }
}

void TanhMlp::input_backward(const std::vector<double>& x, const Workspace& ws,
                             const std::vector<double>& dout, std::vector<double>& dx) const {
    (void)x;
    dx.assign(input_dim, 0.0);
    if (hidden_dim == 0) {
        const double* w = weights.data();
        for (int k = 0; k < output_dim; ++k) {
            const double* row = w + static_cast<std::size_t>(k) * input_dim;
            for (int i = 0; i < input_dim; ++i) dx[i] += dout[k] * row[i];
        }
        return;
    }
    const double* w1 = weights.data();
    const double* w2 = w1 + static_cast<std::size_t>(hidden_dim) * (input_dim + 1);
    std::vector<double> dh(hidden_dim, 0.0);
    for (int k = 0; k < output_dim; ++k) {
        const double* row = w2 + static_cast<std::size_t>(k) * hidden_dim;
        for (int h = 0; h < hidden_dim; ++h) dh[h] += dout[k] * row[h];
    }
    for (int h = 0; h < hidden_dim; ++h) {
        const double da = dh[h] * (1.0 - ws.hidden[h] * ws.hidden[h]);
        const double* row = w1 + static_cast<std::size_t>(h) * input_dim;
        for (int i = 0; i < input_dim; ++i) dx[i] += da * row[i];
    }
}

}  // namespace attrkit
