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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "laws/pauli.hpp"
#include "laws/state_vector.hpp"

namespace laws {

using ParameterVector = Eigen::VectorXd;

/// Ordered gate list whose parameterized gates index into one theta vector.
///
/// Slots must be exactly {0, ..., n_params-1}, each used at least once.
class ParameterizedCircuit {
  public:
    ParameterizedCircuit(int n_qubits, std::vector<Gate> gates);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t n_params() const noexcept { return n_params_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }

    /// True when every slot drives exactly one Pauli-rotation gate, which is
    /// what the two-term shift rule needs.
    [[nodiscard]] bool shift_rule_applicable() const noexcept { return single_use_slots_; }

  private:
    int n_qubits_;
    std::vector<Gate> gates_;
    std::size_t n_params_ = 0;
    bool single_use_slots_ = true;
};

enum class Entangler { Ring, Chain };

/// Layers of one rotation per qubit per pattern entry followed by CNOTs.
[[nodiscard]] ParameterizedCircuit build_hardware_efficient(int n_qubits, int n_layers,
                                                            std::span<const GateKind> pattern,
                                                            Entangler entangler);

/// Seeded random circuit: a fixed RY(pi/4) layer, then \p n_params rotations
/// with uniformly drawn axes placed round-robin over the qubits, with a CNOT
/// chain after every full sweep of the register.
[[nodiscard]] ParameterizedCircuit build_random_pqc(int n_qubits, int n_params,
                                                    std::uint64_t seed);

/// Layered random circuit for gradient-variance scans: RY(pi/4) on every
/// qubit, then \p n_layers of (random-axis rotation per qubit, CNOT chain).
[[nodiscard]] ParameterizedCircuit build_layered_random(int n_qubits, int n_layers,
                                                        std::uint64_t seed);

/// Particle-preserving H2 ansatz: X on qubits 0 and 1 prepares |1100>, then
/// exp(-i theta X0 X1 X2 Y3 / 2) mixes in |0011>. theta = 0 is Hartree-Fock.
[[nodiscard]] ParameterizedCircuit build_h2_ansatz();

/// Reads "RY 0 slot=3", "CNOT 0 1", "X 2", "PAULIROT XXXY 0 1 2 3 slot=0",
/// one gate per line; '#' starts a comment.
[[nodiscard]] ParameterizedCircuit parse_circuit(std::istream &in, int n_qubits);
[[nodiscard]] ParameterizedCircuit load_circuit(const std::filesystem::path &path, int n_qubits);

/// U(theta) |input>.
[[nodiscard]] StateVector evaluate_state(const ParameterizedCircuit &circuit,
                                         const ParameterVector &theta, const StateVector &input);

/// C(theta) = <psi(theta)| H |psi(theta)>.
class CostFunction {
  public:
    CostFunction(ParameterizedCircuit circuit, PauliSumHamiltonian observable);
    CostFunction(ParameterizedCircuit circuit, PauliSumHamiltonian observable,
                 StateVector input_state);

    [[nodiscard]] const ParameterizedCircuit &circuit() const noexcept { return circuit_; }
    [[nodiscard]] const PauliSumHamiltonian &observable() const noexcept { return observable_; }
    [[nodiscard]] const StateVector &input_state() const noexcept { return input_; }
    [[nodiscard]] std::size_t n_params() const noexcept { return circuit_.n_params(); }

  private:
    ParameterizedCircuit circuit_;
    PauliSumHamiltonian observable_;
    StateVector input_;
};

[[nodiscard]] double cost(const CostFunction &cf, const ParameterVector &theta);

} // namespace laws
