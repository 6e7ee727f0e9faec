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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace laws {

using Complex = std::complex<double>;
using Amplitudes = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 20;

/// Bit of basis index \p index that holds qubit \p qubit.
///
/// Qubit 0 is the leftmost label of a ket string and the most significant bit
/// of the amplitude index, so |1100> is index 12.
[[nodiscard]] constexpr std::uint64_t qubit_mask(int n_qubits, int qubit) {
    return std::uint64_t{1} << static_cast<unsigned>(n_qubits - 1 - qubit);
}

/// Normalized pure state over 2^n basis states.
class StateVector {
  public:
    struct AssumeNormalized {};

    /// Takes ownership of \p amplitudes. Throws UsageError if the length is not
    /// 2^n_qubits or the vector is not normalized within 1e-10.
    StateVector(int n_qubits, Amplitudes amplitudes);

    /// Skips the checks; for kernels whose output is unitary by construction.
    StateVector(int n_qubits, Amplitudes amplitudes, AssumeNormalized) noexcept
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    [[nodiscard]] const Amplitudes &amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] Complex operator[](std::size_t index) const { return amplitudes_[index]; }
    [[nodiscard]] double norm() const { return amplitudes_.norm(); }

    /// <this|other>
    [[nodiscard]] Complex inner(const StateVector &other) const;

  private:
    int n_qubits_ = 0;
    Amplitudes amplitudes_;
};

/// |0...0> on \p n_qubits qubits. Throws ConfigurationError outside [1, 20].
[[nodiscard]] StateVector zero_state(int n_qubits);

/// Computational basis state |index>.
[[nodiscard]] StateVector basis_state(int n_qubits, std::uint64_t index);

/// Parses a ket label such as "1100".
[[nodiscard]] StateVector basis_state(std::string_view bits);

/// Normalizes \p amplitudes and wraps them. Throws UsageError for a zero vector.
[[nodiscard]] StateVector normalized_state(int n_qubits, Amplitudes amplitudes);

enum class GateKind {
    RX,
    RY,
    RZ,
    PauliRot, ///< exp(-i theta P / 2) for a Pauli string P over the targets
    CNOT,
    X,
    H,
    Fixed, ///< caller-supplied 2x2 or 4x4 unitary
};

[[nodiscard]] constexpr bool is_parameterized(GateKind kind) {
    return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ ||
           kind == GateKind::PauliRot;
}

[[nodiscard]] std::string_view gate_name(GateKind kind);

/// One circuit element. Parameterized gates reference an entry of theta by slot.
struct Gate {
    GateKind kind = GateKind::X;
    std::vector<int> targets;
    std::optional<std::size_t> parameter_slot;
    /// Pauli letters, one per target, for PauliRot.
    std::string pauli;
    /// Unitary for Fixed gates, acting on targets in order (first target is
    /// the most significant local bit).
    Eigen::MatrixXcd matrix;

    static Gate rx(int qubit, std::size_t slot) { return {GateKind::RX, {qubit}, slot, {}, {}}; }
    static Gate ry(int qubit, std::size_t slot) { return {GateKind::RY, {qubit}, slot, {}, {}}; }
    static Gate rz(int qubit, std::size_t slot) { return {GateKind::RZ, {qubit}, slot, {}, {}}; }
    static Gate rotation(GateKind axis, int qubit, std::size_t slot) {
        return {axis, {qubit}, slot, {}, {}};
    }
    static Gate pauli_rotation(std::string letters, std::vector<int> qubits, std::size_t slot) {
        return {GateKind::PauliRot, std::move(qubits), slot, std::move(letters), {}};
    }
    static Gate cnot(int control, int target) {
        return {GateKind::CNOT, {control, target}, std::nullopt, {}, {}};
    }
    static Gate x(int qubit) { return {GateKind::X, {qubit}, std::nullopt, {}, {}}; }
    static Gate h(int qubit) { return {GateKind::H, {qubit}, std::nullopt, {}, {}}; }
    static Gate fixed(Eigen::MatrixXcd unitary, std::vector<int> qubits) {
        return {GateKind::Fixed, std::move(qubits), std::nullopt, {}, std::move(unitary)};
    }
};

/// Checks the structural invariants of \p gate for an \p n_qubits register.
/// Throws UsageError on violation.
void validate_gate(const Gate &gate, int n_qubits);

/// Dense unitary of \p gate on its own targets (2x2 or 2^k x 2^k).
[[nodiscard]] Eigen::MatrixXcd gate_matrix(const Gate &gate, std::optional<double> theta);

/// Returns gate * state. \p theta must be supplied exactly when the gate is
/// parameterized; otherwise UsageError.
[[nodiscard]] StateVector apply_gate(const StateVector &state, const Gate &gate,
                                     std::optional<double> theta = std::nullopt);

namespace detail {

/// In-place kernel shared by apply_gate and circuit evaluation. No validation.
void apply_gate_inplace(Amplitudes &amplitudes, int n_qubits, const Gate &gate, double theta);

/// Bit masks describing a Pauli string P: P|x> = i^n_y (-1)^popcount(x & sign) |x ^ flip>.
struct PauliMasks {
    std::uint64_t flip = 0; ///< qubits carrying X or Y
    std::uint64_t sign = 0; ///< qubits carrying Y or Z
    int n_y = 0;
};

[[nodiscard]] PauliMasks pauli_masks(int n_qubits, std::string_view letters,
                                     const std::vector<int> &qubits);

/// out = P in. \p out must not alias \p in.
void apply_pauli(Amplitudes &out, const Amplitudes &in, const PauliMasks &masks);

} // namespace detail

} // namespace laws
