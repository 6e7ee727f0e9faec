// Copyright 2026 The laws-vqa Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "laws/classifier.hpp"

#include <array>

#include "laws/errors.hpp"

namespace laws {

namespace {

constexpr std::array<GateKind, 2> kPattern{GateKind::RY, GateKind::RZ};

ParameterVector angles_of(const ParameterVector &params, std::size_t n_angles) {
    if (static_cast<std::size_t>(params.size()) != n_angles + 1) {
        throw UsageError("classifier parameter vector must hold the angles plus a bias");
    }
    return params.head(static_cast<Eigen::Index>(n_angles));
}

} // namespace

ClassifierModel::ClassifierModel(int n_layers)
    : circuit_(build_hardware_efficient(2, n_layers, kPattern, Entangler::Chain)),
      readout_(pauli_observable(2, "Z0")) {}

double ClassifierModel::output(const ParameterVector &params, const Sample &sample) const {
    const auto angles = angles_of(params, n_circuit_params());
    const auto psi = evaluate_state(circuit_, angles, encode_amplitudes(sample.features));
    return expectation(psi, readout_) + params[params.size() - 1];
}

GradientVector ClassifierModel::sample_gradient(const ParameterVector &params,
                                                const Sample &sample) const {
    const auto angles = angles_of(params, n_circuit_params());
    const CostFunction readout(circuit_, readout_, encode_amplitudes(sample.features));
    const double residual = cost(readout, angles) + params[params.size() - 1] - sample.label;
    GradientVector grad(params.size());
    grad.head(angles.size()) = 2.0 * residual * parameter_shift_gradient(readout, angles);
    grad[grad.size() - 1] = 2.0 * residual;
    return grad;
}

double square_loss(const ClassifierModel &model, const ParameterVector &params,
                   const Dataset &data, std::span<const std::size_t> indices) {
    if (indices.empty()) {
        throw UsageError("loss over an empty index set");
    }
    double total = 0.0;
    for (auto i : indices) {
        const auto &s = data.samples.at(i);
        const double r = model.output(params, s) - s.label;
        total += r * r;
    }
    return total / static_cast<double>(indices.size());
}

double accuracy(const ClassifierModel &model, const ParameterVector &params, const Dataset &data,
                std::span<const std::size_t> indices) {
    if (indices.empty()) {
        return 0.0;
    }
    std::size_t correct = 0;
    for (auto i : indices) {
        const auto &s = data.samples.at(i);
        correct += model.predict(params, s) == s.label ? 1U : 0U;
    }
    return static_cast<double>(correct) / static_cast<double>(indices.size());
}

GradientVector stochastic_gradient(const ClassifierModel &model, const ParameterVector &params,
                                   std::span<const Sample> batch) {
    if (batch.empty()) {
        throw UsageError("stochastic gradient needs a non-empty batch");
    }
    GradientVector total = GradientVector::Zero(static_cast<Eigen::Index>(model.n_params()));
    for (const auto &s : batch) {
        total += model.sample_gradient(params, s);
    }
    return total / static_cast<double>(batch.size());
}

ClassifierObjective::ClassifierObjective(ClassifierModel model, Dataset data,
                                         std::size_t batch_size)
    : model_(std::move(model)), data_(std::move(data)), batch_size_(batch_size) {
    if (batch_size_ == 0) {
        throw ConfigurationError("batch_size must be at least 1");
    }
    if (data_.train.empty()) {
        throw UsageError("training split is empty");
    }
    for (auto i : data_.train) {
        train_.push_back(data_.samples.at(i));
    }
}

double ClassifierObjective::cost(const ParameterVector &params) const {
    return square_loss(model_, params, data_, data_.train);
}

GradientVector ClassifierObjective::gradient(const ParameterVector &params) const {
    return stochastic_gradient(model_, params, train_);
}

GradientVector ClassifierObjective::sample_gradient(const ParameterVector &params,
                                                    Rng &rng) const {
    std::vector<Sample> batch;
    batch.reserve(batch_size_);
    for (std::size_t b = 0; b < batch_size_; ++b) {
        batch.push_back(train_[rng.below(train_.size())]);
    }
    return stochastic_gradient(model_, params, batch);
}

Eigen::MatrixXd ClassifierObjective::metric(const ParameterVector &params) const {
    const auto angles = angles_of(params, model_.n_circuit_params());
    const auto p = static_cast<Eigen::Index>(model_.n_params());
    Eigen::MatrixXd total = Eigen::MatrixXd::Zero(p, p);
    for (const auto &s : train_) {
        total.topLeftCorner(p - 1, p - 1) +=
            fubini_study_metric(model_.circuit(), angles, encode_amplitudes(s.features)).matrix;
    }
    total /= static_cast<double>(train_.size());
    total(p - 1, p - 1) = 1.0;
    return total;
}

} // namespace laws
