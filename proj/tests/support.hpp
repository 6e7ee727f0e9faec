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

// Independent reference implementations used by the unit tests.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <Eigen/Dense>

#include "laws/circuit.hpp"
#include "laws/rng.hpp"
#include "laws/state_vector.hpp"

namespace laws::testing {

/// Full 2^n x 2^n matrix of a gate, built by index bookkeeping rather than
/// the simulator kernel.
inline Eigen::MatrixXcd embed(const Gate &gate, int n, std::optional<double> theta) {
    const Eigen::MatrixXcd local = gate_matrix(gate, theta);
    const auto dim = std::uint64_t{1} << n;
    const auto k = gate.targets.size();
    std::uint64_t target_bits = 0;
    for (int q : gate.targets) {
        target_bits |= qubit_mask(n, q);
    }
    auto local_index = [&](std::uint64_t x) {
        std::uint64_t idx = 0;
        for (std::size_t j = 0; j < k; ++j) {
            idx = (idx << 1) | ((x & qubit_mask(n, gate.targets[j])) ? 1U : 0U);
        }
        return idx;
    };
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                   static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        for (std::uint64_t y = 0; y < dim; ++y) {
            if ((x & ~target_bits) == (y & ~target_bits)) {
                full(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
                    local(static_cast<Eigen::Index>(local_index(x)),
                          static_cast<Eigen::Index>(local_index(y)));
            }
        }
    }
    return full;
}

/// Product of embedded gate matrices, last gate leftmost.
inline Eigen::MatrixXcd dense_unitary(const ParameterizedCircuit &circuit,
                                      const ParameterVector &theta) {
    const auto dim = Eigen::Index{1} << circuit.n_qubits();
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
    for (const auto &gate : circuit.gates()) {
        std::optional<double> angle;
        if (gate.parameter_slot) {
            angle = theta[static_cast<Eigen::Index>(*gate.parameter_slot)];
        }
        u = embed(gate, circuit.n_qubits(), angle) * u;
    }
    return u;
}

inline StateVector random_state(int n, Rng &rng) {
    Amplitudes a(Eigen::Index{1} << n);
    for (auto &z : a) {
        z = {rng.normal(), rng.normal()};
    }
    return normalized_state(n, a);
}

inline ParameterVector random_angles(std::size_t p, Rng &rng) {
    ParameterVector theta(static_cast<Eigen::Index>(p));
    for (auto &v : theta) {
        v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    return theta;
}

/// Metric recovered from the fidelity distance 1 - |<psi(theta)|psi(theta + d)>|^2,
/// which equals d^T F d to second order. Diagonal from single-axis probes,
/// off-diagonal by polarization.
inline Eigen::MatrixXd fidelity_metric(const ParameterizedCircuit &circuit,
                                       const ParameterVector &theta, const StateVector &input,
                                       double h = 1e-4) {
    const auto psi = evaluate_state(circuit, theta, input);
    auto distance = [&](const ParameterVector &d) {
        const auto other = evaluate_state(circuit, theta + d, input);
        return 1.0 - std::norm(psi.inner(other));
    };
    const auto p = theta.size();
    Eigen::MatrixXd f(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
        for (Eigen::Index j = i; j < p; ++j) {
            ParameterVector plus = ParameterVector::Zero(p);
            ParameterVector minus = ParameterVector::Zero(p);
            plus[i] += h;
            plus[j] += h;
            minus[i] += h;
            minus[j] -= h;
            f(i, j) = i == j ? distance(plus) / (4.0 * h * h)
                             : (distance(plus) - distance(minus)) / (4.0 * h * h);
            f(j, i) = f(i, j);
        }
    }
    return f;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("laws_vqa_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace laws::testing
