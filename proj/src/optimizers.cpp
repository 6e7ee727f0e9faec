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

#include "laws/optimizers.hpp"

#include <algorithm>
#include <cmath>

#include "laws/errors.hpp"

namespace laws {

namespace {

void require_finite(const Eigen::VectorXd &v, const char *what) {
    if (!v.allFinite()) {
        throw NumericError(std::string("non-finite ") + what);
    }
}

void require_size(const OptimizerState &state, const GradientVector &grad) {
    if (grad.size() != state.theta.size()) {
        throw UsageError("gradient length does not match parameter count");
    }
}

void ensure_moments(OptimizerState &state) {
    if (state.first_moment.size() != state.theta.size()) {
        state.first_moment = Eigen::VectorXd::Zero(state.theta.size());
    }
    if (state.second_moment.size() != state.theta.size()) {
        state.second_moment = Eigen::VectorXd::Zero(state.theta.size());
    }
}

/// numerator / (sqrt(accumulator) + eps), with 0/0 read as 0.
Eigen::VectorXd scaled_step(const Eigen::VectorXd &numerator, const Eigen::VectorXd &accumulator,
                            double epsilon) {
    Eigen::VectorXd out(numerator.size());
    for (Eigen::Index i = 0; i < numerator.size(); ++i) {
        const double denom = std::sqrt(accumulator[i]) + epsilon;
        out[i] = denom > 0.0 ? numerator[i] / denom : 0.0;
    }
    return out;
}

void inner_step(const std::string &inner_name, OptimizerState &inner, const GradientVector &grad,
                const Objective &objective, const OptimizerConfig &config, double rate) {
    if (inner_name == "sgd") {
        sgd_step(inner, grad, rate);
    }
    else if (inner_name == "adagrad") {
        adagrad_step(inner, grad, rate, config.epsilon);
    }
    else if (inner_name == "adam") {
        adam_step(inner, grad, rate, config.beta1, config.beta2, config.epsilon);
    }
    else if (inner_name == "qng") {
        qng_step(inner, grad, objective.metric(inner.theta), rate, config.delta, config.cutoff);
    }
    else {
        throw ConfigurationError("inner_optimizer must be sgd, adagrad, adam or qng, got '" +
                                 inner_name + "'");
    }
}

template <typename Enum> bool in_range(Enum value, Enum first, Enum last) {
    return static_cast<int>(value) >= static_cast<int>(first) &&
           static_cast<int>(value) <= static_cast<int>(last);
}

} // namespace

void OptimizerConfig::validate() const {
    auto positive = [](double v, const char *name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw ConfigurationError(std::string(name) + " must be positive and finite");
        }
    };
    auto open_unit = [](double v, const char *name) {
        if (!(v > 0.0 && v < 1.0)) {
            throw ConfigurationError(std::string(name) + " must lie in (0, 1)");
        }
    };
    if (!(eta >= 0.0) || !std::isfinite(eta)) {
        throw ConfigurationError("eta must be non-negative and finite");
    }
    positive(mu, "mu");
    if (K < 1) {
        throw ConfigurationError("K must be at least 1");
    }
    open_unit(alpha, "alpha");
    open_unit(beta1, "beta1");
    open_unit(beta2, "beta2");
    open_unit(beta, "beta");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
        throw ConfigurationError("epsilon must be non-negative");
    }
    if (!(delta >= 0.0) || !std::isfinite(delta)) {
        throw ConfigurationError("delta must be non-negative");
    }
    if (!(cutoff >= 0.0) || !std::isfinite(cutoff)) {
        throw ConfigurationError("cutoff must be non-negative");
    }
    if (!(c0 > 0.0 && c0 <= 1.0)) {
        throw ConfigurationError("c0 must lie in (0, 1]");
    }
    if (!std::isfinite(lambda)) {
        throw ConfigurationError("lambda must be finite");
    }
    if (!in_range(schedule, Schedule::Constant, Schedule::Theorem1) ||
        !in_range(warm_start_strategy, WarmStartStrategy::InnerSgd, WarmStartStrategy::Ema) ||
        !in_range(delta_variant, DeltaVariant::Lookahead, DeltaVariant::AdamLike)) {
        throw ConfigurationError("invalid enumeration value");
    }
    if (inner_optimizer != "sgd" && inner_optimizer != "adagrad" && inner_optimizer != "adam" &&
        inner_optimizer != "qng") {
        throw ConfigurationError("inner_optimizer must be sgd, adagrad, adam or qng, got '" +
                                 inner_optimizer + "'");
    }
    if (inner_optimizer != "sgd" && warm_start_strategy != WarmStartStrategy::InnerSgd) {
        throw ConfigurationError("warm_start_strategy other than inner-sgd needs inner_optimizer "
                                 "sgd");
    }
}

void sgd_step(OptimizerState &state, const GradientVector &grad, double eta) {
    require_size(state, grad);
    require_finite(grad, "gradient");
    state.theta -= eta * grad;
    ++state.t;
}

void adagrad_step(OptimizerState &state, const GradientVector &grad, double eta,
                  double epsilon) {
    require_size(state, grad);
    require_finite(grad, "gradient");
    ensure_moments(state);
    state.second_moment += grad.cwiseAbs2();
    state.theta -= eta * scaled_step(grad, state.second_moment, epsilon);
    ++state.t;
}

void adam_step(OptimizerState &state, const GradientVector &grad, double eta, double beta1,
               double beta2, double epsilon) {
    require_size(state, grad);
    require_finite(grad, "gradient");
    ensure_moments(state);
    state.first_moment = beta1 * state.first_moment + (1.0 - beta1) * grad;
    state.second_moment = beta2 * state.second_moment + (1.0 - beta2) * grad.cwiseAbs2();
    state.theta -= eta * scaled_step(state.first_moment, state.second_moment, epsilon);
    ++state.t;
}

void qng_step(OptimizerState &state, const GradientVector &grad, const Eigen::MatrixXd &metric,
              double eta, double delta, double cutoff) {
    require_size(state, grad);
    require_finite(grad, "gradient");
    require_finite(metric.reshaped(), "metric");
    state.theta -= eta * (damped_pseudo_inverse(metric, delta, cutoff) * grad);
    ++state.t;
}

void qng_step(OptimizerState &state, const Objective &objective, double eta, double delta,
              double cutoff) {
    qng_step(state, objective.gradient(state.theta), objective.metric(state.theta), eta, delta,
             cutoff);
}

double lr_schedule(Schedule schedule, int t, int k, int K, double c0, double mu0) {
    if (t < 1 || k < 1 || k > K) {
        throw UsageError("schedule needs t >= 1 and 1 <= k <= K");
    }
    if (schedule == Schedule::Constant) {
        return mu0;
    }
    return c0 / static_cast<double>((t - 1) * k + K + 2);
}

WarmStartResult warm_start(const ParameterVector &theta_prev, const OptimizerConfig &config,
                           int t, const GradientSource &gradient_source) {
    if (config.K < 1) {
        throw UsageError("warm start needs K >= 1");
    }
    WarmStartResult result;
    result.grad_sq_sum = Eigen::VectorXd::Zero(theta_prev.size());
    const int K = config.K;
    auto rate = [&](int k) { return lr_schedule(config.schedule, t, k, K, config.c0, config.mu); };
    auto sample = [&](const ParameterVector &at) {
        GradientVector g = gradient_source(at);
        require_finite(g, "gradient");
        result.max_grad_norm = std::max(result.max_grad_norm, g.norm());
        result.grad_sq_sum += g.cwiseAbs2();
        return g;
    };

    switch (config.warm_start_strategy) {
    case WarmStartStrategy::InnerSgd: {
        ParameterVector v = theta_prev;
        for (int k = 1; k <= K; ++k) {
            const double mu_k = rate(k);
            v -= mu_k * sample(v);
            result.rate_sum += mu_k;
        }
        result.theta_warm = std::move(v);
        break;
    }
    case WarmStartStrategy::AveragedAtTheta: {
        ParameterVector accumulated = ParameterVector::Zero(theta_prev.size());
        for (int k = 1; k <= K; ++k) {
            const double mu_k = rate(k);
            accumulated += mu_k * sample(theta_prev);
            result.rate_sum += mu_k;
        }
        result.theta_warm = theta_prev - accumulated / K;
        break;
    }
    case WarmStartStrategy::Ema: {
        ParameterVector v = theta_prev;
        ParameterVector ema = ParameterVector::Zero(theta_prev.size());
        for (int k = 1; k <= K; ++k) {
            const double mu_k = rate(k);
            const ParameterVector signed_step = -mu_k * sample(v);
            v += signed_step;
            ema += std::pow(config.beta, K - k) * signed_step;
            result.rate_sum += mu_k;
        }
        result.theta_warm = theta_prev + (1.0 - config.beta) * ema;
        break;
    }
    }
    return result;
}

void laws_step(OptimizerState &state, const Objective &objective, const OptimizerConfig &config,
               Rng &rng) {
    const int t = state.t + 1;
    state.fast = state.theta;
    const auto ws = warm_start(state.theta, config, t, [&](const ParameterVector &v) {
        return objective.sample_gradient(v, rng);
    });
    const Eigen::MatrixXd metric = objective.metric(ws.theta_warm);
    require_finite(metric.reshaped(), "metric");
    const ParameterVector displacement = ws.theta_warm - state.theta;
    const ParameterVector next =
        ws.theta_warm - config.outer_lambda() *
                            (damped_pseudo_inverse(metric, config.delta, config.cutoff) *
                             displacement);
    require_finite(next, "parameters");
    state.theta = next;
    state.fast = next;
    state.k = 0;
    state.t = t;
}

void wssgd_step(OptimizerState &state, OptimizerState &inner, const Objective &objective,
                const OptimizerConfig &config, Rng &rng) {
    const int t = state.t + 1;
    ParameterVector warm;
    Eigen::VectorXd grad_sq_sum;
    if (config.inner_optimizer == "sgd") {
        const auto ws = warm_start(state.theta, config, t, [&](const ParameterVector &v) {
            return objective.sample_gradient(v, rng);
        });
        warm = ws.theta_warm;
        grad_sq_sum = ws.grad_sq_sum;
    }
    else {
        if (config.warm_start_strategy != WarmStartStrategy::InnerSgd) {
            throw ConfigurationError("warm_start_strategy other than inner-sgd needs "
                                     "inner_optimizer sgd");
        }
        inner.theta = state.theta;
        ensure_moments(inner);
        grad_sq_sum = Eigen::VectorXd::Zero(state.theta.size());
        for (int k = 1; k <= config.K; ++k) {
            const GradientVector g = objective.sample_gradient(inner.theta, rng);
            require_finite(g, "gradient");
            grad_sq_sum += g.cwiseAbs2();
            const double mu_k =
                lr_schedule(config.schedule, t, k, config.K, config.c0, config.mu);
            inner_step(config.inner_optimizer, inner, g, objective, config, mu_k);
            state.fast = inner.theta;
            state.k = k;
        }
        warm = inner.theta;
    }
    const double lambda = config.outer_lambda();
    ParameterVector next;
    switch (config.delta_variant) {
    case DeltaVariant::Lookahead: {
        const double delta_t = 1.0 - config.alpha;
        next = delta_t * state.theta + (1.0 - delta_t) * warm;
        break;
    }
    case DeltaVariant::Fisher: {
        const Eigen::MatrixXd metric = objective.metric(warm);
        require_finite(metric.reshaped(), "metric");
        const Eigen::MatrixXd damped =
            metric + config.delta * Eigen::MatrixXd::Identity(metric.rows(), metric.cols());
        // Delta_t = 1 - lambda (F + delta I); theta + (1 - Delta_t)(warm - theta).
        next = state.theta + lambda * (damped * (warm - state.theta));
        break;
    }
    case DeltaVariant::AdamLike: {
        const Eigen::VectorXd delta_t =
            Eigen::VectorXd::Ones(state.theta.size()) - lambda * grad_sq_sum.cwiseSqrt();
        next = delta_t.cwiseProduct(state.theta) +
               (Eigen::VectorXd::Ones(state.theta.size()) - delta_t).cwiseProduct(warm);
        break;
    }
    }
    require_finite(next, "parameters");
    state.theta = next;
    state.fast = next;
    state.k = 0;
    state.t = t;
}

const std::vector<std::string> &registered_optimizers() {
    static const std::vector<std::string> names{"sgd",       "adagrad", "adam", "qng",
                                                "lookahead", "laws",    "wssgd"};
    return names;
}

OptimizerKind parse_optimizer(std::string_view name) {
    const auto &names = registered_optimizers();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        std::string known;
        for (const auto &n : names) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw ConfigurationError("unknown optimizer '" + std::string(name) +
                                 "'; registered optimizers: " + known);
    }
    return static_cast<OptimizerKind>(it - names.begin());
}

std::string_view optimizer_name(OptimizerKind kind) {
    return registered_optimizers().at(static_cast<std::size_t>(kind));
}

Optimizer::Optimizer(OptimizerKind kind, OptimizerConfig config, ParameterVector theta0)
    : kind_(kind), config_(std::move(config)), state_(theta0), inner_(theta0) {
    config_.validate();
    if (kind_ == OptimizerKind::Lookahead) {
        config_.delta_variant = DeltaVariant::Lookahead;
    }
}

void Optimizer::step(const Objective &objective, Rng &rng) {
    switch (kind_) {
    case OptimizerKind::Sgd:
        sgd_step(state_, objective.sample_gradient(state_.theta, rng), config_.eta);
        break;
    case OptimizerKind::Adagrad:
        adagrad_step(state_, objective.sample_gradient(state_.theta, rng), config_.eta,
                     config_.epsilon);
        break;
    case OptimizerKind::Adam:
        adam_step(state_, objective.sample_gradient(state_.theta, rng), config_.eta,
                  config_.beta1, config_.beta2, config_.epsilon);
        break;
    case OptimizerKind::Qng: {
        const GradientVector grad = objective.sample_gradient(state_.theta, rng);
        qng_step(state_, grad, objective.metric(state_.theta), config_.eta, config_.delta,
                 config_.cutoff);
        break;
    }
    case OptimizerKind::Laws:
        laws_step(state_, objective, config_, rng);
        return;
    case OptimizerKind::Lookahead:
    case OptimizerKind::Wssgd:
        wssgd_step(state_, inner_, objective, config_, rng);
        return;
    }
    require_finite(state_.theta, "parameters");
    state_.fast = state_.theta;
}

} // namespace laws
