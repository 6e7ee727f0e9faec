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

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "laws/circuit.hpp"

namespace laws {

using GradientVector = Eigen::VectorXd;

/// Real symmetric Fubini-Study metric F = Re[G] and the damping used when it
/// is inverted.
struct MetricTensor {
    Eigen::MatrixXd matrix;
    double damping = 0.0;
};

inline constexpr double kDefaultDamping = 1e-6;
inline constexpr double kDefaultEigenCutoff = 1e-9;

/// dC/dtheta_k = [C(theta + pi/2 e_k) - C(theta - pi/2 e_k)] / 2.
/// Throws CapabilityError when a slot drives more than one gate.
[[nodiscard]] GradientVector parameter_shift_gradient(const CostFunction &cf,
                                                      const ParameterVector &theta);

/// Single component of the shift-rule gradient.
[[nodiscard]] double parameter_shift_component(const CostFunction &cf,
                                               const ParameterVector &theta, std::size_t k);

/// Central differences with step \p h > 0.
[[nodiscard]] GradientVector finite_difference_gradient(const CostFunction &cf,
                                                        const ParameterVector &theta, double h);

/// Exact d psi / d theta_k for every k, via [psi(theta + pi e_k) - psi(theta - pi e_k)] / 4.
[[nodiscard]] std::vector<Amplitudes> state_derivatives(const ParameterizedCircuit &circuit,
                                                        const ParameterVector &theta,
                                                        const StateVector &input);

/// G_ij = <d_i psi, d_j psi> - <d_i psi, psi><psi, d_j psi>.
[[nodiscard]] Eigen::MatrixXcd quantum_geometric_tensor(const ParameterizedCircuit &circuit,
                                                        const ParameterVector &theta,
                                                        const StateVector &input);

/// Symmetrized real part of the geometric tensor.
[[nodiscard]] MetricTensor fubini_study_metric(const ParameterizedCircuit &circuit,
                                               const ParameterVector &theta,
                                               const StateVector &input,
                                               double damping = kDefaultDamping);

/// (F + delta I)^+ with eigenvalues at or below \p cutoff dropped.
/// Throws UsageError if F is not symmetric within 1e-10 or delta/cutoff < 0.
[[nodiscard]] Eigen::MatrixXd damped_pseudo_inverse(const Eigen::MatrixXd &metric, double delta,
                                                    double cutoff);
[[nodiscard]] Eigen::MatrixXd damped_pseudo_inverse(const MetricTensor &metric,
                                                    double cutoff = kDefaultEigenCutoff);

/// Circuit family for the gradient-variance scan, indexed by register size.
using CircuitFamily = std::function<ParameterizedCircuit(int n_qubits, std::uint64_t seed)>;

/// Observable family for the scan; default is Z on qubit 0.
using ObservableFamily = std::function<PauliSumHamiltonian(int n_qubits)>;

struct BpRow {
    int n_qubits = 0;
    int n_samples = 0;
    double grad_mean = 0.0;
    double grad_variance = 0.0; ///< unbiased sample variance
    double stderr_mean = 0.0;   ///< standard error of grad_mean
};

/// For each register size draws \p n_samples theta uniform in [0, 2pi) and
/// records the first partial derivative of the cost. Sample s of size n uses
/// the stream Rng::derive(seed, n, s), so results do not depend on
/// \p threads.
[[nodiscard]] std::vector<BpRow> bp_variance_scan(const CircuitFamily &family,
                                                  const std::vector<int> &qubit_range,
                                                  int n_samples, std::uint64_t seed,
                                                  const ObservableFamily &observable = {},
                                                  unsigned threads = 1);

/// Least-squares fit of log(variance) against qubit count.
struct DecayFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
    /// Two-sided p-value for slope != 0 (Student t, n - 2 dof).
    double p_value = 1.0;
};

[[nodiscard]] DecayFit fit_log_variance(const std::vector<BpRow> &rows);

} // namespace laws
