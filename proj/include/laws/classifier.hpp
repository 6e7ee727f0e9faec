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

#pragma once

#include <span>
#include <vector>

#include "laws/circuit.hpp"
#include "laws/dataset.hpp"
#include "laws/objective.hpp"

namespace laws {

/// Two-qubit variational classifier: amplitude-encoded input, layered
/// [RY, RZ] rotations with a CNOT per layer, readout <Z0> + bias.
///
/// Parameter vectors carry the circuit angles followed by the bias.
class ClassifierModel {
  public:
    explicit ClassifierModel(int n_layers = 6);

    [[nodiscard]] const ParameterizedCircuit &circuit() const noexcept { return circuit_; }
    [[nodiscard]] std::size_t n_circuit_params() const noexcept { return circuit_.n_params(); }
    [[nodiscard]] std::size_t n_params() const noexcept { return circuit_.n_params() + 1; }

    [[nodiscard]] double output(const ParameterVector &params, const Sample &sample) const;
    [[nodiscard]] double predict(const ParameterVector &params, const Sample &sample) const {
        return output(params, sample) >= 0.0 ? 1.0 : -1.0;
    }

    /// Gradient of (output - label)^2 with respect to angles and bias.
    [[nodiscard]] GradientVector sample_gradient(const ParameterVector &params,
                                                 const Sample &sample) const;

  private:
    ParameterizedCircuit circuit_;
    PauliSumHamiltonian readout_;
};

/// Mean square loss over \p indices.
[[nodiscard]] double square_loss(const ClassifierModel &model, const ParameterVector &params,
                                 const Dataset &data, std::span<const std::size_t> indices);

/// Fraction of \p indices whose predicted sign matches the label.
[[nodiscard]] double accuracy(const ClassifierModel &model, const ParameterVector &params,
                              const Dataset &data, std::span<const std::size_t> indices);

/// Mean of per-sample square-loss gradients over \p batch. UsageError if empty.
[[nodiscard]] GradientVector stochastic_gradient(const ClassifierModel &model,
                                                 const ParameterVector &params,
                                                 std::span<const Sample> batch);

/// Square loss on the training split, mini-batches drawn uniformly with
/// replacement. The metric is the training-set mean of the per-sample
/// Fubini-Study metrics, with a unit entry for the bias.
class ClassifierObjective final : public Objective {
  public:
    ClassifierObjective(ClassifierModel model, Dataset data, std::size_t batch_size = 5);

    [[nodiscard]] const ClassifierModel &model() const noexcept { return model_; }
    [[nodiscard]] const Dataset &data() const noexcept { return data_; }

    [[nodiscard]] std::size_t n_params() const override { return model_.n_params(); }
    [[nodiscard]] double cost(const ParameterVector &params) const override;
    [[nodiscard]] GradientVector gradient(const ParameterVector &params) const override;
    [[nodiscard]] GradientVector sample_gradient(const ParameterVector &params,
                                                 Rng &rng) const override;
    [[nodiscard]] Eigen::MatrixXd metric(const ParameterVector &params) const override;

  private:
    ClassifierModel model_;
    Dataset data_;
    std::vector<Sample> train_;
    std::size_t batch_size_;
};

} // namespace laws
