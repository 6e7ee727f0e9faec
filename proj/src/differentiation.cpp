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

#include "laws/differentiation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include <Eigen/Eigenvalues>
#include <boost/math/distributions/students_t.hpp>

#include "laws/errors.hpp"
#include "laws/rng.hpp"

namespace laws {

namespace {

void require_shift_rule(const ParameterizedCircuit &circuit) {
    if (!circuit.shift_rule_applicable()) {
        throw CapabilityError("parameter-shift rule needs every parameter slot to drive exactly "
                              "one Pauli rotation; use finite differences instead");
    }
}

void check_theta(const ParameterizedCircuit &circuit, const ParameterVector &theta) {
    if (static_cast<std::size_t>(theta.size()) != circuit.n_params()) {
        throw UsageError("theta length does not match circuit parameter count");
    }
}

} // namespace

double parameter_shift_component(const CostFunction &cf, const ParameterVector &theta,
                                  std::size_t k) {
    require_shift_rule(cf.circuit());
    check_theta(cf.circuit(), theta);
    constexpr double shift = std::numbers::pi / 2.0;
    ParameterVector shifted = theta;
    const auto i = static_cast<Eigen::Index>(k);
    shifted[i] = theta[i] + shift;
    const double plus = cost(cf, shifted);
    shifted[i] = theta[i] - shift;
    const double minus = cost(cf, shifted);
    return 0.5 * (plus - minus);
}

GradientVector parameter_shift_gradient(const CostFunction &cf, const ParameterVector &theta) {
    require_shift_rule(cf.circuit());
    check_theta(cf.circuit(), theta);
    GradientVector grad(theta.size());
    for (Eigen::Index k = 0; k < theta.size(); ++k) {
        grad[k] = parameter_shift_component(cf, theta, static_cast<std::size_t>(k));
    }
    return grad;
}

GradientVector finite_difference_gradient(const CostFunction &cf, const ParameterVector &theta,
                                          double h) {
    if (!(h > 0.0)) {
        throw UsageError("finite-difference step must be positive");
    }
    check_theta(cf.circuit(), theta);
    GradientVector grad(theta.size());
    ParameterVector shifted = theta;
    for (Eigen::Index k = 0; k < theta.size(); ++k) {
        shifted[k] = theta[k] + h;
        const double plus = cost(cf, shifted);
        shifted[k] = theta[k] - h;
        const double minus = cost(cf, shifted);
        shifted[k] = theta[k];
        grad[k] = (plus - minus) / (2.0 * h);
    }
    return grad;
}

std::vector<Amplitudes> state_derivatives(const ParameterizedCircuit &circuit,
                                          const ParameterVector &theta, const StateVector &input) {
    require_shift_rule(circuit);
    check_theta(circuit, theta);
    std::vector<Amplitudes> derivatives;
    derivatives.reserve(circuit.n_params());
    ParameterVector shifted = theta;
    for (Eigen::Index k = 0; k < theta.size(); ++k) {
        shifted[k] = theta[k] + std::numbers::pi;
        const auto plus = evaluate_state(circuit, shifted, input);
        shifted[k] = theta[k] - std::numbers::pi;
        const auto minus = evaluate_state(circuit, shifted, input);
        shifted[k] = theta[k];
        derivatives.emplace_back(0.25 * (plus.amplitudes() - minus.amplitudes()));
    }
    return derivatives;
}

Eigen::MatrixXcd quantum_geometric_tensor(const ParameterizedCircuit &circuit,
                                          const ParameterVector &theta, const StateVector &input) {
    const auto psi = evaluate_state(circuit, theta, input);
    const auto d = state_derivatives(circuit, theta, input);
    const auto p = static_cast<Eigen::Index>(d.size());
    Eigen::VectorXcd overlap_with_psi(p); // <d_i psi, psi>
    for (Eigen::Index i = 0; i < p; ++i) {
        overlap_with_psi[i] = d[static_cast<std::size_t>(i)].dot(psi.amplitudes());
    }
    Eigen::MatrixXcd g(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = i; j < p; ++j) {
            const Complex value =
                d[static_cast<std::size_t>(i)].dot(d[static_cast<std::size_t>(j)]) -
                overlap_with_psi[i] * std::conj(overlap_with_psi[j]);
            g(i, j) = value;
            g(j, i) = std::conj(value);
        }
    }
    return g;
}

MetricTensor fubini_study_metric(const ParameterizedCircuit &circuit,
                                 const ParameterVector &theta, const StateVector &input,
                                 double damping) {
    const Eigen::MatrixXd f = quantum_geometric_tensor(circuit, theta, input).real();
    return {0.5 * (f + f.transpose()), damping};
}

Eigen::MatrixXd damped_pseudo_inverse(const Eigen::MatrixXd &metric, double delta,
                                      double cutoff) {
    if (metric.rows() != metric.cols()) {
        throw UsageError("metric must be square");
    }
    if (!(delta >= 0.0) || !(cutoff >= 0.0)) {
        throw UsageError("damping and cutoff must be non-negative");
    }
    if ((metric - metric.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw UsageError("metric is not symmetric");
    }
    const auto n = metric.rows();
    const Eigen::MatrixXd damped = metric + delta * Eigen::MatrixXd::Identity(n, n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(damped);
    if (solver.info() != Eigen::Success) {
        throw NumericError("metric eigendecomposition failed");
    }
    Eigen::VectorXd inverted = solver.eigenvalues();
    for (Eigen::Index i = 0; i < n; ++i) {
        inverted[i] = inverted[i] > cutoff ? 1.0 / inverted[i] : 0.0;
    }
    return solver.eigenvectors() * inverted.asDiagonal() * solver.eigenvectors().transpose();
}

Eigen::MatrixXd damped_pseudo_inverse(const MetricTensor &metric, double cutoff) {
    return damped_pseudo_inverse(metric.matrix, metric.damping, cutoff);
}

std::vector<BpRow> bp_variance_scan(const CircuitFamily &family,
                                    const std::vector<int> &qubit_range, int n_samples,
                                    std::uint64_t seed, const ObservableFamily &observable,
                                    unsigned threads) {
    if (n_samples < 30) {
        throw UsageError("gradient-variance scan needs at least 30 samples");
    }
    threads = std::max(1U, threads);
    std::vector<BpRow> rows;
    for (int n : qubit_range) {
        const CostFunction cf(family(n, seed),
                              observable ? observable(n) : pauli_observable(n, "Z0"));
        const auto p = static_cast<Eigen::Index>(cf.n_params());
        std::vector<double> samples(static_cast<std::size_t>(n_samples));
        auto work = [&](unsigned worker) {
            for (auto s = static_cast<std::size_t>(worker); s < samples.size(); s += threads) {
                Rng rng = Rng::derive(seed, static_cast<std::uint64_t>(n), s);
                ParameterVector theta(p);
                for (Eigen::Index k = 0; k < p; ++k) {
                    theta[k] = rng.uniform(0.0, 2.0 * std::numbers::pi);
                }
                samples[s] = parameter_shift_component(cf, theta, 0);
            }
        };
        if (threads == 1) {
            work(0);
        }
        else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) {
                pool.emplace_back(work, w);
            }
        }
        double mean = 0.0;
        for (double g : samples) {
            mean += g;
        }
        mean /= n_samples;
        double ss = 0.0;
        for (double g : samples) {
            ss += (g - mean) * (g - mean);
        }
        const double variance = ss / (n_samples - 1);
        rows.push_back({n, n_samples, mean, variance, std::sqrt(variance / n_samples)});
    }
    return rows;
}

DecayFit fit_log_variance(const std::vector<BpRow> &rows) {
    if (rows.size() < 2) {
        throw UsageError("decay fit needs at least two register sizes");
    }
    const auto m = static_cast<double>(rows.size());
    double mx = 0.0;
    double my = 0.0;
    for (const auto &row : rows) {
        if (!(row.grad_variance > 0.0)) {
            throw NumericError("gradient variance is zero for " + std::to_string(row.n_qubits) +
                               " qubits; log fit undefined");
        }
        mx += row.n_qubits;
        my += std::log(row.grad_variance);
    }
    mx /= m;
    my /= m;
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto &row : rows) {
        const double dx = row.n_qubits - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(row.grad_variance) - my);
    }
    DecayFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (rows.size() > 2) {
        double sse = 0.0;
        for (const auto &row : rows) {
            const double r =
                std::log(row.grad_variance) - (fit.intercept + fit.slope * row.n_qubits);
            sse += r * r;
        }
        const double dof = m - 2.0;
        fit.slope_stderr = std::sqrt(sse / dof / sxx);
        if (fit.slope_stderr > 0.0) {
            const boost::math::students_t dist(dof);
            const double t = std::abs(fit.slope / fit.slope_stderr);
            fit.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, t));
        }
        else {
            fit.p_value = 0.0;
        }
    }
    return fit;
}

} // namespace laws
