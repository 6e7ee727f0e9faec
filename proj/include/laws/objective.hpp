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

#include <Eigen/Dense>

#include "laws/circuit.hpp"
#include "laws/differentiation.hpp"
#include "laws/rng.hpp"

namespace laws {

/// What an optimizer sees of a problem: cost, gradients and the metric.
class Objective {
  public:
    virtual ~Objective() = default;

    [[nodiscard]] virtual std::size_t n_params() const = 0;

    /// Full-data cost.
    [[nodiscard]] virtual double cost(const ParameterVector &theta) const = 0;

    /// Full-data analytic gradient.
    [[nodiscard]] virtual GradientVector gradient(const ParameterVector &theta) const = 0;

    /// One draw from the batch source. Data-free objectives return the exact
    /// gradient and leave \p rng untouched.
    [[nodiscard]] virtual GradientVector sample_gradient(const ParameterVector &theta,
                                                         Rng &rng) const {
        (void)rng;
        return gradient(theta);
    }

    /// Undamped metric used by natural-gradient updates.
    [[nodiscard]] virtual Eigen::MatrixXd metric(const ParameterVector &theta) const = 0;
};

/// Energy minimization of a CostFunction with exact gradients.
class VqeObjective final : public Objective {
  public:
    explicit VqeObjective(CostFunction cf) : cf_(std::move(cf)) {}

    [[nodiscard]] const CostFunction &cost_function() const noexcept { return cf_; }

    [[nodiscard]] std::size_t n_params() const override { return cf_.n_params(); }
    [[nodiscard]] double cost(const ParameterVector &theta) const override {
        return laws::cost(cf_, theta);
    }
    [[nodiscard]] GradientVector gradient(const ParameterVector &theta) const override {
        return parameter_shift_gradient(cf_, theta);
    }
    [[nodiscard]] Eigen::MatrixXd metric(const ParameterVector &theta) const override {
        return fubini_study_metric(cf_.circuit(), theta, cf_.input_state()).matrix;
    }

  private:
    CostFunction cf_;
};

} // namespace laws
