#include "gkdv/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gkdv/io.hpp"
#include "json.hpp"

namespace gkdv::surrogate {

namespace {

void check_architecture(const std::vector<int>& layer_sizes) {
    if (layer_sizes.size() < 2)
        throw std::invalid_argument("model: need at least input and output layers");
    for (int n : layer_sizes)
        if (n < 1) throw std::invalid_argument("model: layer sizes must be >= 1");
}

// Activations for every layer of one sample, reused by the backward pass.
struct ForwardTrace {
    std::vector<std::vector<double>> layer_values;  // [layer][node]
};

std::array<double, 3> scaled_input(const Model& m, const std::array<double, 3>& in) {
    return {(in[0] - m.input_scale[0].offset) * m.input_scale[0].factor,
            (in[1] - m.input_scale[1].offset) * m.input_scale[1].factor,
            (in[2] - m.input_scale[2].offset) * m.input_scale[2].factor};
}

double forward_traced(const Model& m, const std::array<double, 3>& input,
                      ForwardTrace* trace) {
    const std::size_t n_layers = m.layer_sizes.size();
    const auto scaled = scaled_input(m, input);
    std::vector<double> current(scaled.begin(), scaled.end());
    if (trace) trace->layer_values.assign(1, current);

    for (std::size_t l = 0; l + 1 < n_layers; ++l) {
        const int n_in = m.layer_sizes[l];
        const int n_out = m.layer_sizes[l + 1];
        std::vector<double> next(static_cast<std::size_t>(n_out));
        for (int j = 0; j < n_out; ++j) {
            double a = m.biases[l][static_cast<std::size_t>(j)];
            for (int i = 0; i < n_in; ++i)
                a += current[static_cast<std::size_t>(i)] *
                     m.weights[l][static_cast<std::size_t>(i) * n_out + j];
            const bool hidden = (l + 2 < n_layers);
            next[static_cast<std::size_t>(j)] = hidden ? std::tanh(a) : a;
        }
        current = std::move(next);
        if (trace) trace->layer_values.push_back(current);
    }
    return current[0];
}

}  // namespace

std::size_t Model::parameter_count() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l)
        n += static_cast<std::size_t>(layer_sizes[l]) * layer_sizes[l + 1] +
             layer_sizes[l + 1];
    return n;
}

AdamState AdamState::zeros_like(const Model& model) {
    AdamState s;
    for (std::size_t l = 0; l + 1 < model.layer_sizes.size(); ++l) {
        s.m_weights.emplace_back(model.weights[l].size(), 0.0);
        s.v_weights.emplace_back(model.weights[l].size(), 0.0);
        s.m_biases.emplace_back(model.biases[l].size(), 0.0);
        s.v_biases.emplace_back(model.biases[l].size(), 0.0);
    }
    return s;
}

Model init_model(const std::vector<int>& layer_sizes, std::uint64_t seed) {
    check_architecture(layer_sizes);
    Model m;
    m.layer_sizes = layer_sizes;
    SplitMix64 rng{seed};
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
        const int n_in = layer_sizes[l];
        const int n_out = layer_sizes[l + 1];
        const double s = std::sqrt(6.0 / (n_in + n_out));
        std::vector<double> w(static_cast<std::size_t>(n_in) * n_out);
        for (double& v : w) v = (2.0 * rng.uniform() - 1.0) * s;
        m.weights.push_back(std::move(w));
        m.biases.emplace_back(static_cast<std::size_t>(n_out), 0.0);
    }
    return m;
}

double forward(const Model& model, const std::array<double, 3>& input) {
    return forward_traced(model, input, nullptr);
}

std::pair<double, Gradients> loss_and_gradients(const Model& model,
                                                const Dataset& data,
                                                double l2_lambda) {
    if (data.inputs.empty())
        throw std::invalid_argument("loss_and_gradients: empty dataset");
    if (data.inputs.size() != data.targets.size())
        throw std::invalid_argument("loss_and_gradients: inputs/targets length mismatch");

    const std::size_t n_layers = model.layer_sizes.size();
    Gradients g;
    for (std::size_t l = 0; l + 1 < n_layers; ++l) {
        g.weights.emplace_back(model.weights[l].size(), 0.0);
        g.biases.emplace_back(model.biases[l].size(), 0.0);
    }

    const double inv_m = 1.0 / static_cast<double>(data.inputs.size());
    double data_loss = 0.0;
    ForwardTrace trace;
    for (std::size_t s = 0; s < data.inputs.size(); ++s) {
        const double out = forward_traced(model, data.inputs[s], &trace);
        const double r = out - data.targets[s];
        data_loss += r * r;

        // delta for the linear output node, then walk the layers back.
        std::vector<double> delta{2.0 * r * inv_m};
        for (std::size_t l = n_layers - 1; l-- > 0;) {
            const int n_in = model.layer_sizes[l];
            const int n_out = model.layer_sizes[l + 1];
            const auto& z_in = trace.layer_values[l];
            for (int i = 0; i < n_in; ++i)
                for (int j = 0; j < n_out; ++j)
                    g.weights[l][static_cast<std::size_t>(i) * n_out + j] +=
                        z_in[static_cast<std::size_t>(i)] * delta[static_cast<std::size_t>(j)];
            for (int j = 0; j < n_out; ++j)
                g.biases[l][static_cast<std::size_t>(j)] += delta[static_cast<std::size_t>(j)];
            if (l == 0) break;
            std::vector<double> prev(static_cast<std::size_t>(n_in), 0.0);
            for (int i = 0; i < n_in; ++i) {
                double acc = 0.0;
                for (int j = 0; j < n_out; ++j)
                    acc += model.weights[l][static_cast<std::size_t>(i) * n_out + j] *
                           delta[static_cast<std::size_t>(j)];
                const double z = z_in[static_cast<std::size_t>(i)];
                prev[static_cast<std::size_t>(i)] = acc * (1.0 - z * z);  // tanh'
            }
            delta = std::move(prev);
        }
    }

    double l2 = 0.0;
    for (std::size_t l = 0; l + 1 < n_layers; ++l)
        for (std::size_t i = 0; i < model.weights[l].size(); ++i) {
            const double w = model.weights[l][i];
            l2 += w * w;
            g.weights[l][i] += 2.0 * l2_lambda * w;
        }

    return {data_loss * inv_m + l2_lambda * l2, std::move(g)};
}

double mse(const Model& model, const Dataset& data) {
    if (data.inputs.empty()) throw std::invalid_argument("mse: empty dataset");
    double acc = 0.0;
    for (std::size_t s = 0; s < data.inputs.size(); ++s) {
        const double r = forward(model, data.inputs[s]) - data.targets[s];
        acc += r * r;
    }
    return acc / static_cast<double>(data.inputs.size());
}

void adam_step(Model& model, AdamState& state, const Gradients& grads,
               double learning_rate) {
    state.step_count += 1;
    const double t = static_cast<double>(state.step_count);
    const double bc1 = 1.0 - std::pow(kAdamBeta1, t);
    const double bc2 = 1.0 - std::pow(kAdamBeta2, t);

    const auto update = [&](std::vector<double>& theta, std::vector<double>& m,
                            std::vector<double>& v, const std::vector<double>& g) {
        if (theta.size() != g.size())
            throw std::invalid_argument("adam_step: gradient shape mismatch");
        for (std::size_t i = 0; i < theta.size(); ++i) {
            m[i] = kAdamBeta1 * m[i] + (1.0 - kAdamBeta1) * g[i];
            v[i] = kAdamBeta2 * v[i] + (1.0 - kAdamBeta2) * g[i] * g[i];
            const double m_hat = m[i] / bc1;
            const double v_hat = v[i] / bc2;
            theta[i] -= learning_rate * m_hat / (std::sqrt(v_hat) + kAdamEpsilon);
        }
    };
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        update(model.weights[l], state.m_weights[l], state.v_weights[l],
               grads.weights[l]);
        update(model.biases[l], state.m_biases[l], state.v_biases[l],
               grads.biases[l]);
    }
}

TrainResult train(const TrainConfig& config, const Dataset& data) {
    if (config.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");
    if (!(config.learning_rate > 0.0))
        throw std::invalid_argument("train: learning rate must be > 0");
    if (config.l2_lambda < 0.0)
        throw std::invalid_argument("train: l2_lambda must be >= 0");
    if (data.inputs.empty()) throw std::invalid_argument("train: empty dataset");

    Model model = init_model({3, 32, 32, 32, 1}, config.seed);

    // Map each input dimension's training range onto [-1, 1]; tanh layers
    // should not see the raw x in [-2,2] next to w in [0,1].
    for (int d = 0; d < 3; ++d) {
        double lo = data.inputs[0][static_cast<std::size_t>(d)];
        double hi = lo;
        for (const auto& in : data.inputs) {
            lo = std::min(lo, in[static_cast<std::size_t>(d)]);
            hi = std::max(hi, in[static_cast<std::size_t>(d)]);
        }
        if (hi > lo)
            model.input_scale[static_cast<std::size_t>(d)] =
                ScaleRecord{0.5 * (lo + hi), 2.0 / (hi - lo)};
        else
            model.input_scale[static_cast<std::size_t>(d)] = ScaleRecord{lo, 1.0};
    }

    AdamState state = AdamState::zeros_like(model);
    TrainResult result;
    result.loss_history.reserve(static_cast<std::size_t>(config.epochs));
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        auto [loss, grads] = loss_and_gradients(model, data, config.l2_lambda);
        if (!std::isfinite(loss))
            throw std::runtime_error("train: loss became non-finite at epoch " +
                                     std::to_string(epoch + 1) +
                                     "; lower the learning rate");
        result.loss_history.push_back(loss);
        adam_step(model, state, grads, config.learning_rate);
    }
    result.final_loss = loss_and_gradients(model, data, config.l2_lambda).first;
    result.final_mse = mse(model, data);
    result.model = std::move(model);
    return result;
}

std::vector<std::vector<double>> predict_grid(const Model& model,
                                              const std::vector<double>& xs,
                                              const std::vector<double>& taus,
                                              double w) {
    std::vector<std::vector<double>> out(xs.size(),
                                         std::vector<double>(taus.size(), 0.0));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < taus.size(); ++j)
            out[i][j] = forward(model, {xs[i], taus[j], w});
    return out;
}

void save_model(const Model& model, const std::filesystem::path& path) {
    check_architecture(model.layer_sizes);
    // Hand-rolled writer: the %.17g rendering (via format_real) is the
    // determinism contract, so no library serializer sits in the path.
    std::string s = "{\n  \"layer_sizes\": [";
    for (std::size_t i = 0; i < model.layer_sizes.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(model.layer_sizes[i]);
    }
    s += "],\n  \"activation\": \"" + model.activation + "\",\n";
    s += "  \"input_scale\": [";
    for (std::size_t d = 0; d < 3; ++d) {
        if (d) s += ", ";
        s += "{\"offset\": " + io::format_real(model.input_scale[d].offset) +
             ", \"factor\": " + io::format_real(model.input_scale[d].factor) + "}";
    }
    s += "],\n";
    const auto write_mats = [&s](const char* name,
                                 const std::vector<std::vector<double>>& mats) {
        s += "  \"";
        s += name;
        s += "\": [\n";
        for (std::size_t l = 0; l < mats.size(); ++l) {
            s += "    [";
            for (std::size_t i = 0; i < mats[l].size(); ++i) {
                if (i) s += ", ";
                s += io::format_real(mats[l][i]);
            }
            s += (l + 1 < mats.size()) ? "],\n" : "]\n";
        }
        s += "  ]";
    };
    write_mats("weights", model.weights);
    s += ",\n";
    write_mats("biases", model.biases);
    s += "\n}\n";
    io::write_file_atomic(path, s);
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelFormatError("model file: cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ModelFormatError("model file: parse error: " + std::string(e.what()));
    }

    const auto require = [&](const char* field) -> const nlohmann::json& {
        if (!j.contains(field))
            throw ModelFormatError("model file: missing field '" +
                                   std::string(field) + "'");
        return j.at(field);
    };

    Model m;
    const auto& sizes = require("layer_sizes");
    if (!sizes.is_array() || sizes.empty())
        throw ModelFormatError("model file: 'layer_sizes' must be a nonempty array");
    for (const auto& v : sizes) {
        if (!v.is_number_integer() || v.get<int>() < 1)
            throw ModelFormatError("model file: 'layer_sizes' entries must be integers >= 1");
        m.layer_sizes.push_back(v.get<int>());
    }
    check_architecture(m.layer_sizes);

    const auto& act = require("activation");
    if (!act.is_string() || act.get<std::string>() != "tanh")
        throw ModelFormatError("model file: 'activation' must be \"tanh\"");
    m.activation = "tanh";

    const auto& scale = require("input_scale");
    if (!scale.is_array() || scale.size() != 3)
        throw ModelFormatError("model file: 'input_scale' must have 3 entries");
    for (std::size_t d = 0; d < 3; ++d) {
        const auto& rec = scale[d];
        if (!rec.is_object() || !rec.contains("offset") || !rec.contains("factor") ||
            !rec["offset"].is_number() || !rec["factor"].is_number())
            throw ModelFormatError("model file: 'input_scale[" + std::to_string(d) +
                                   "]' needs numeric offset and factor");
        m.input_scale[d] = ScaleRecord{rec["offset"].get<double>(),
                                       rec["factor"].get<double>()};
        if (!std::isfinite(m.input_scale[d].offset) ||
            !std::isfinite(m.input_scale[d].factor))
            throw ModelFormatError("model file: non-finite input_scale entry");
    }

    const auto load_mats = [&](const char* name, bool is_weights) {
        const auto& arr = require(name);
        const std::size_t expect_layers = m.layer_sizes.size() - 1;
        if (!arr.is_array() || arr.size() != expect_layers)
            throw ModelFormatError("model file: '" + std::string(name) + "' must have " +
                                   std::to_string(expect_layers) + " layers");
        std::vector<std::vector<double>> out;
        for (std::size_t l = 0; l < expect_layers; ++l) {
            const std::size_t expect =
                is_weights ? static_cast<std::size_t>(m.layer_sizes[l]) *
                                 m.layer_sizes[l + 1]
                           : static_cast<std::size_t>(m.layer_sizes[l + 1]);
            const auto& row = arr[l];
            if (!row.is_array() || row.size() != expect)
                throw ModelFormatError("model file: '" + std::string(name) + "[" +
                                       std::to_string(l) + "]' has " +
                                       std::to_string(row.size()) + " values, expected " +
                                       std::to_string(expect));
            std::vector<double> vals;
            vals.reserve(expect);
            for (const auto& v : row) {
                if (!v.is_number())
                    throw ModelFormatError("model file: non-numeric entry in '" +
                                           std::string(name) + "'");
                const double d = v.get<double>();
                if (!std::isfinite(d))
                    throw ModelFormatError("model file: non-finite entry in '" +
                                           std::string(name) + "'");
                vals.push_back(d);
            }
            out.push_back(std::move(vals));
        }
        return out;
    };
    m.weights = load_mats("weights", true);
    m.biases = load_mats("biases", false);
    return m;
}

}  // namespace gkdv::surrogate
