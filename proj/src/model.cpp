#include "attrkit/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "attrkit/rng.hpp"

namespace attrkit {

void TrainConfig::validate() const {
    if (learning_rate <= 0.0) throw std::invalid_argument("TrainConfig: learning_rate must be > 0");
    if (epochs < 1) throw std::invalid_argument("TrainConfig: epochs must be >= 1");
    if (batch_size < 1) throw std::invalid_argument("TrainConfig: batch_size must be >= 1");
    if (l2_penalty < 0.0) throw std::invalid_argument("TrainConfig: l2_penalty must be >= 0");
}

PredictionModel::PredictionModel(Architecture a, int input_dim, int hidden_dim, int num_classes)
    : arch(a), net(input_dim, a == Architecture::LinearSoftmax ? 0 : hidden_dim, num_classes) {
    if (num_classes < 2) throw std::invalid_argument("PredictionModel: K must be >= 2");
    if (a == Architecture::MlpTanh && hidden_dim < 1)
        throw std::invalid_argument("PredictionModel: MLP needs hidden_dim >= 1");
}

namespace {

ClassDistribution softmax(const std::vector<double>& logits) {
    const double zmax = *std::max_element(logits.begin(), logits.end());
    std::vector<double> p(logits.size());
    double total = 0.0;
    for (std::size_t k = 0; k < logits.size(); ++k) {
        p[k] = std::exp(logits[k] - zmax);
        total += p[k];
    }
    for (auto& v : p) v /= total;
    return ClassDistribution(std::move(p));
}

}  // namespace

ClassDistribution PredictionModel::predict_raw(const std::vector<double>& input) const {
    return softmax(net.forward(input));
}

double PredictionModel::accumulate_nll_grad(const std::vector<double>& input, int y, double weight,
                                            std::vector<double>& grad) const {
    TanhMlp::Workspace ws;
    std::vector<double> logits;
    net.forward(input, ws, logits);
    const ClassDistribution p = softmax(logits);
    // dNLL/dlogit_k = p_k - 1{k == y}
    std::vector<double> dlogits(p.probs);
    dlogits[y] -= 1.0;
    for (auto& v : dlogits) v *= weight;
    net.backward(input, ws, dlogits, grad);
    return -std::log(std::max(p[y], kProbFloor));
}

ClassDistribution predict_proba(const PredictionModel& model, const Instance& x) {
    if (x.dim() != model.input_dim())
        throw std::invalid_argument("predict_proba: dimension mismatch");
    return model.predict_raw(x.features);
}

std::vector<double> input_gradient(const PredictionModel& model, const Instance& x, int y) {
    TanhMlp::Workspace ws;
    std::vector<double> logits;
    model.net.forward(x.features, ws, logits);
    const ClassDistribution p = softmax(logits);
    // dp_y/dlogit_k = p_y (1{k==y} - p_k)
    std::vector<double> dlogits(p.num_classes());
    for (int k = 0; k < p.num_classes(); ++k) {
        dlogits[k] = p[y] * ((k == y ? 1.0 : 0.0) - p[k]);
    }
    std::vector<double> dx;
    model.net.input_backward(x.features, ws, dlogits, dx);
    return dx;
}

int predicted_class(const PredictionModel& model, const Instance& x) {
    return argmax_class(predict_proba(model, x));
}

PredictionModel train_model(const Dataset& data, const TrainConfig& cfg, Architecture arch,
                            int hidden_dim, std::vector<double>* epoch_losses) {
    data.validate();
    cfg.validate();
    if (data.size() == 0) throw std::invalid_argument("train_model: empty dataset");

    PredictionModel model(arch, data.d, hidden_dim, data.num_classes);
    model.net.init_uniform(cfg.seed);

    Rng shuffle_rng(derive_seed(cfg.seed, 0x5151u));
    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> grad(model.net.weights.size());

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        shuffle_rng.shuffle(order);
        double epoch_loss = 0.0;
        for (std::size_t start = 0; start < order.size(); start += cfg.batch_size) {
            const std::size_t end = std::min(order.size(), start + cfg.batch_size);
            const double inv = 1.0 / static_cast<double>(end - start);
            std::fill(grad.begin(), grad.end(), 0.0);
            for (std::size_t j = start; j < end; ++j) {
                const std::size_t i = order[j];
                epoch_loss += model.accumulate_nll_grad(data.instances[i].features,
                                                        data.labels[i], inv, grad);
            }
            for (std::size_t w = 0; w < grad.size(); ++w) {
                grad[w] += cfg.l2_penalty * model.net.weights[w];
                model.net.weights[w] -= cfg.learning_rate * grad[w];
            }
        }
        epoch_loss /= static_cast<double>(data.size());
        if (!std::isfinite(epoch_loss))
            throw NumericError("train_model: non-finite loss at epoch " + std::to_string(epoch));
        if (epoch_losses) epoch_losses->push_back(epoch_loss);
    }
    return model;
}

// --- persistence -------------------------------------------------------------

namespace {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{}) throw std::invalid_argument("weights file: bad number '" + s + "'");
    return v;
}

}  // namespace

void write_weights_file(const std::string& path, const std::map<std::string, std::string>& meta,
                        const std::vector<double>& weights) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "attrkit-weights v1\n";
    bool first = true;
    for (const auto& [k, v] : meta) {
        if (!first) out << ' ';
        out << k << '=' << v;
        first = false;
    }
    out << '\n';
    for (double w : weights) out << format_double(w) << '\n';
}

WeightsFile read_weights_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line) || line != "attrkit-weights v1")
        throw std::runtime_error(path + ": not an attrkit-weights v1 file");
    WeightsFile wf;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": missing metadata line");
    std::istringstream meta(line);
    std::string token;
    while (meta >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ": bad metadata token '" + token + "'");
        wf.meta[token.substr(0, eq)] = token.substr(eq + 1);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        wf.weights.push_back(parse_double(line));
    }
    return wf;
}

std::map<std::string, std::string> model_meta(const PredictionModel& model) {
    return {
        {"arch", model.arch == Architecture::LinearSoftmax ? "linear" : "mlp"},
        {"input_dim", std::to_string(model.net.input_dim)},
        {"hidden_dim", std::to_string(model.net.hidden_dim)},
        {"output_dim", std::to_string(model.net.output_dim)},
        {"kind", "model"},
    };
}

void save_model(const PredictionModel& model, const std::string& path) {
    write_weights_file(path, model_meta(model), model.net.weights);
}

PredictionModel model_from_weights(const WeightsFile& wf) {
    const auto get = [&](const std::string& key) {
        const auto it = wf.meta.find(key);
        if (it == wf.meta.end()) throw std::runtime_error("weights file: missing key " + key);
        return it->second;
    };
    const std::string arch = get("arch");
    PredictionModel model(arch == "linear" ? Architecture::LinearSoftmax : Architecture::MlpTanh,
                          std::stoi(get("input_dim")),
                          std::max(1, std::stoi(get("hidden_dim"))),
                          std::stoi(get("output_dim")));
    if (wf.weights.size() != model.net.num_weights())
        throw std::runtime_error("weights file: weight count mismatch");
    model.net.weights = wf.weights;
    return model;
}

PredictionModel load_model(const std::string& path) {
    const WeightsFile wf = read_weights_file(path);
    const auto it = wf.meta.find("kind");
    if (it == wf.meta.end() || it->second != "model")
        throw std::runtime_error(path + ": not a prediction-model weights file");
    return model_from_weights(wf);
}

}  // namespace attrkit
