#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "attrkit/mlp.hpp"
#include "attrkit/types.hpp"

namespace attrkit {

enum class Architecture { LinearSoftmax, MlpTanh };

struct TrainConfig {
    double learning_rate = 0.1;
    int epochs = 50;
    int batch_size = 32;
    std::uint64_t seed = 0;
    double l2_penalty = 0.0;

    void validate() const;
};

// Softmax classifier over one of the two closed-form-differentiable
// architectures; immutable after training.
struct PredictionModel {
    Architecture arch = Architecture::LinearSoftmax;
    TanhMlp net;

    PredictionModel() = default;
    PredictionModel(Architecture a, int input_dim, int hidden_dim, int num_classes);

    int input_dim() const { return net.input_dim; }
    int num_classes() const { return net.output_dim; }

    ClassDistribution predict_raw(const std::vector<double>& input) const;
    // Per-example mean-NLL gradient accumulation; returns the example's NLL.
    double accumulate_nll_grad(const std::vector<double>& input, int y, double weight,
                               std::vector<double>& grad) const;
};

ClassDistribution predict_proba(const PredictionModel& model, const Instance& x);

// Exact gradient of p_model(y | x) with respect to x.
std::vector<double> input_gradient(const PredictionModel& model, const Instance& x, int y);

// argmax of predict_proba; ties break toward the lowest class index.
int predicted_class(const PredictionModel& model, const Instance& x);

// Mini-batch gradient descent on mean NLL (+ optional L2). Deterministic
// given cfg.seed. epoch_losses, when non-null, receives the mean training
// loss after each epoch.
PredictionModel train_model(const Dataset& data, const TrainConfig& cfg,
                            Architecture arch = Architecture::LinearSoftmax, int hidden_dim = 0,
                            std::vector<double>* epoch_losses = nullptr);

// --- weight persistence -----------------------------------------------------
// Versioned text format: "attrkit-weights v1", a key=value metadata line,
// then one weight per line in shortest round-trip decimal form.

struct WeightsFile {
    std::map<std::string, std::string> meta;
    std::vector<double> weights;
};

void write_weights_file(const std::string& path, const std::map<std::string, std::string>& meta,
                        const std::vector<double>& weights);
WeightsFile read_weights_file(const std::string& path);

void save_model(const PredictionModel& model, const std::string& path);
PredictionModel load_model(const std::string& path);
PredictionModel model_from_weights(const WeightsFile& wf);
std::map<std::string, std::string> model_meta(const PredictionModel& model);

}  // namespace attrkit
