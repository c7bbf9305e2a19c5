#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gkdv::surrogate {

// Deterministic 64-bit generator (splitmix update), written out so any
// language can reproduce the exact weight stream.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Training/evaluation samples: inputs are (x, tau, w) triples.
struct Dataset {
    std::vector<std::array<double, 3>> inputs;
    std::vector<double> targets;
    std::string provenance;  // "adm" or "exact"
};

// Per-dimension affine input map: scaled = (value - offset) * factor.
struct ScaleRecord {
    double offset = 0.0;
    double factor = 1.0;
};

// Fully connected network: tanh hidden layers, identity output.
// weights[i] is row-major (layer_sizes[i] x layer_sizes[i+1]);
// biases[i] has layer_sizes[i+1] entries.
struct Model {
    std::vector<int> layer_sizes;
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;
    std::array<ScaleRecord, 3> input_scale{};
    std::string activation = "tanh";

    std::size_t parameter_count() const;
};

struct Gradients {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;
};

inline constexpr double kAdamBeta1 = 0.9;
inline constexpr double kAdamBeta2 = 0.999;
inline constexpr double kAdamEpsilon = 1e-8;

struct AdamState {
    std::vector<std::vector<double>> m_weights, v_weights;
    std::vector<std::vector<double>> m_biases, v_biases;
    long step_count = 0;

    static AdamState zeros_like(const Model& model);
};

struct TrainConfig {
    double learning_rate = 0.005;
    int epochs = 1990;
    double l2_lambda = 1e-4;
    std::uint64_t seed = 42;
    // Training is always full batch; the default dataset fits trivially.
};

struct TrainResult {
    Model model;
    std::vector<double> loss_history;  // objective per epoch, pre-update
    double final_loss = 0.0;           // objective after the last update
    double final_mse = 0.0;            // data term alone, after the last update
};

// Weights uniform in [-s, s], s = sqrt(6 / (fan_in + fan_out)), drawn
// layer by layer in row-major order from one SplitMix64 stream seeded
// with `seed`; biases zero. Same seed gives a bit-identical model.
Model init_model(const std::vector<int>& layer_sizes, std::uint64_t seed);

double forward(const Model& model, const std::array<double, 3>& input);

// Objective: (1/M) sum (forward - target)^2 + l2_lambda * sum |W|^2
// (weights only, biases unpenalized). Gradients by reverse accumulation;
// samples visited in index order.
std::pair<double, Gradients> loss_and_gradients(const Model& model,
                                                const Dataset& data,
                                                double l2_lambda);

// Data term of the objective alone.
double mse(const Model& model, const Dataset& data);

// Standard bias-corrected update; increments state.step_count by one.
void adam_step(Model& model, AdamState& state, const Gradients& grads,
               double learning_rate);

// Full-batch Adam for config.epochs epochs on the [3,32,32,32,1]
// architecture. Sets the model's input scaling to map each input
// dimension's training range onto [-1, 1] before training starts.
// Throws std::runtime_error with a diagnostic if the loss leaves the
// finite range.
TrainResult train(const TrainConfig& config, const Dataset& data);

// Row = x index, column = tau index.
std::vector<std::vector<double>> predict_grid(const Model& model,
                                              const std::vector<double>& xs,
                                              const std::vector<double>& taus,
                                              double w);

struct ModelFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// JSON with fields layer_sizes, activation, input_scale, weights, biases;
// reals written with 17 significant digits so save/load round-trips are
// bit-exact. Writes are atomic (temp file + rename). load_model throws
// ModelFormatError naming the offending field; no partial model escapes.
void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

}  // namespace gkdv::surrogate
