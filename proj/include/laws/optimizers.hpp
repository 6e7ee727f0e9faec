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

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "laws/differentiation.hpp"
#include "laws/objective.hpp"
#include "laws/rng.hpp"

namespace laws {

enum class Schedule { Constant, Theorem1 };

enum class WarmStartStrategy {
    InnerSgd,        ///< K consecutive SGD steps, theta_warm = v_K
    AveragedAtTheta, ///< K gradients sampled at theta_{t-1}, averaged
    Ema,             ///< inner SGD trajectory, steps combined by an EMA
};

/// Reparameterization coefficient used by the WS-SGD outer update.
enum class DeltaVariant {
    Lookahead, ///< Delta = 1 - alpha
    Fisher,    ///< metric-valued Delta
    AdamLike,  ///< Delta = 1 - lambda sqrt(sum_k g_k^2), elementwise
};

struct OptimizerConfig {
    double eta = 0.01; ///< outer learning rate
    double mu = 0.5;   ///< warm-start (look-around) learning rate
    int K = 5;         ///< warm-start iterations
    double alpha = 0.5;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double beta = 0.9; ///< EMA mixing for the Ema warm start
    double epsilon = 1e-8;
    double delta = kDefaultDamping;
    double cutoff = kDefaultEigenCutoff;
    double c0 = 1.0;
    /// Outer step factor lambda_t. Non-positive means eta / K.
    double lambda = 0.0;
    Schedule schedule = Schedule::Constant;
    WarmStartStrategy warm_start_strategy = WarmStartStrategy::InnerSgd;
    DeltaVariant delta_variant = DeltaVariant::Fisher;
    /// Inner optimizer W for WS-SGD: sgd, adagrad, adam or qng.
    std::string inner_optimizer = "sgd";

    [[nodiscard]] double outer_lambda() const { return lambda > 0.0 ? lambda : eta / K; }

    /// Throws ConfigurationError naming the first offending field.
    void validate() const;
};

/// Slow weights, fast weights and moment accumulators.
///
/// After every outer warm-start step the fast weights equal theta again.
struct OptimizerState {
    ParameterVector theta;
    ParameterVector fast;
    int t = 0; ///< completed outer iterations
    int k = 0; ///< inner step within the current outer iteration
    Eigen::VectorXd first_moment;
    Eigen::VectorXd second_moment;

    OptimizerState() = default;
    explicit OptimizerState(ParameterVector theta0)
        : theta(theta0), fast(theta0), first_moment(Eigen::VectorXd::Zero(theta0.size())),
          second_moment(Eigen::VectorXd::Zero(theta0.size())) {}
};

/// theta <- theta - eta g.
void sgd_step(OptimizerState &state, const GradientVector &grad, double eta);

/// theta <- theta - eta g / (sqrt(sum of g^2) + eps).
void adagrad_step(OptimizerState &state, const GradientVector &grad, double eta,
                  double epsilon = 1e-8);

/// EMA first moment over the un-bias-corrected second moment:
/// m = b1 m + (1 - b1) g, v = b2 v + (1 - b2) g^2, theta <- theta - eta m / (sqrt(v) + eps).
void adam_step(OptimizerState &state, const GradientVector &grad, double eta, double beta1 = 0.9,
               double beta2 = 0.999, double epsilon = 1e-8);

/// theta <- theta - eta (F + delta I)^+ g.
void qng_step(OptimizerState &state, const GradientVector &grad, const Eigen::MatrixXd &metric,
              double eta, double delta = kDefaultDamping, double cutoff = kDefaultEigenCutoff);

/// qng_step with the gradient and metric taken from \p objective at theta.
void qng_step(OptimizerState &state, const Objective &objective, double eta,
              double delta = kDefaultDamping, double cutoff = kDefaultEigenCutoff);

/// Inner-loop rate mu_k^t: mu0 for Constant, c0 / ((t-1) k + K + 2) for Theorem1.
[[nodiscard]] double lr_schedule(Schedule schedule, int t, int k, int K, double c0, double mu0);

using GradientSource = std::function<GradientVector(const ParameterVector &)>;

struct WarmStartResult {
    ParameterVector theta_warm;
    /// Largest norm among the sampled gradients.
    double max_grad_norm = 0.0;
    /// Sum of the inner rates mu_k used.
    double rate_sum = 0.0;
    /// Elementwise sum of squared sampled gradients (adam-like Delta).
    Eigen::VectorXd grad_sq_sum;
};

/// Look-around re-initialization from theta_prev for outer iteration \p t.
///
/// Inner steps are signed: g_k = -mu_k grad C(v_{k-1}), so the inner-sgd
/// strategy gives theta_prev + sum_k g_k = v_K.
[[nodiscard]] WarmStartResult warm_start(const ParameterVector &theta_prev,
                                         const OptimizerConfig &config, int t,
                                         const GradientSource &gradient_source);

/// One outer iteration of the look-around warm-started natural gradient:
/// warm start, metric at theta_warm, then
/// theta_t = theta_warm - lambda_t (F + delta I)^+ (theta_warm - theta_{t-1}).
void laws_step(OptimizerState &state, const Objective &objective, const OptimizerConfig &config,
               Rng &rng);

/// One outer iteration of generalized warm-start SGD. With inner_optimizer
/// sgd the inner loop is warm_start (any strategy and schedule); otherwise K
/// steps of that optimizer, whose moments \p inner carries across outer
/// iterations.
void wssgd_step(OptimizerState &state, OptimizerState &inner, const Objective &objective,
                const OptimizerConfig &config, Rng &rng);

enum class OptimizerKind { Sgd, Adagrad, Adam, Qng, Lookahead, Laws, Wssgd };

[[nodiscard]] const std::vector<std::string> &registered_optimizers();

/// Throws ConfigurationError listing registered names for unknown input.
[[nodiscard]] OptimizerKind parse_optimizer(std::string_view name);
[[nodiscard]] std::string_view optimizer_name(OptimizerKind kind);

/// Uniform stepping interface over every registered update rule.
class Optimizer {
  public:
    Optimizer(OptimizerKind kind, OptimizerConfig config, ParameterVector theta0);
    Optimizer(std::string_view name, OptimizerConfig config, ParameterVector theta0)
        : Optimizer(parse_optimizer(name), std::move(config), std::move(theta0)) {}

    /// One outer iteration. Throws NumericError on non-finite gradients or
    /// parameters.
    void step(const Objective &objective, Rng &rng);

    [[nodiscard]] OptimizerKind kind() const noexcept { return kind_; }
    [[nodiscard]] const OptimizerConfig &config() const noexcept { return config_; }
    [[nodiscard]] const OptimizerState &state() const noexcept { return state_; }
    [[nodiscard]] const ParameterVector &theta() const noexcept { return state_.theta; }

  private:
    OptimizerKind kind_;
    OptimizerConfig config_;
    OptimizerState state_;
    OptimizerState inner_;
};

} // namespace laws
