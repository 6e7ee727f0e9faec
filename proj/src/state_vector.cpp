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

#include "laws/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "laws/errors.hpp"

namespace laws {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigurationError("qubit count " + std::to_string(n_qubits) +
                                 " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

Eigen::Matrix2cd rotation_matrix(GateKind kind, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex is{0.0, s};
    Eigen::Matrix2cd m;
    switch (kind) {
    case GateKind::RX:
        m << c, -is, -is, c;
        break;
    case GateKind::RY:
        m << c, -s, s, c;
        break;
    case GateKind::RZ:
        m << Complex{c, -s}, 0.0, 0.0, Complex{c, s};
        break;
    default:
        throw UsageError("not a single-qubit rotation");
    }
    return m;
}

void apply_single(Amplitudes &amps, std::uint64_t mask, const Eigen::Matrix2cd &m) {
    const auto dim = static_cast<std::uint64_t>(amps.size());
    for (std::uint64_t i = 0; i < dim; ++i) {
        if ((i & mask) != 0U) {
            continue;
        }
        const Complex a0 = amps[static_cast<Eigen::Index>(i)];
        const Complex a1 = amps[static_cast<Eigen::Index>(i | mask)];
        amps[static_cast<Eigen::Index>(i)] = m(0, 0) * a0 + m(0, 1) * a1;
        amps[static_cast<Eigen::Index>(i | mask)] = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

void apply_dense(Amplitudes &amps, int n_qubits, const std::vector<int> &targets,
                 const Eigen::MatrixXcd &m) {
    const auto k = targets.size();
    const std::size_t local_dim = std::size_t{1} << k;
    std::vector<std::uint64_t> offsets(local_dim, 0);
    std::uint64_t all_targets = 0;
    for (std::size_t local = 0; local < local_dim; ++local) {
        for (std::size_t j = 0; j < k; ++j) {
            if (((local >> (k - 1 - j)) & 1U) != 0U) {
                offsets[local] |= qubit_mask(n_qubits, targets[j]);
            }
        }
    }
    for (int q : targets) {
        all_targets |= qubit_mask(n_qubits, q);
    }
    Eigen::VectorXcd in(static_cast<Eigen::Index>(local_dim));
    const auto dim = static_cast<std::uint64_t>(amps.size());
    for (std::uint64_t base = 0; base < dim; ++base) {
        if ((base & all_targets) != 0U) {
            continue;
        }
        for (std::size_t local = 0; local < local_dim; ++local) {
            in[static_cast<Eigen::Index>(local)] =
                amps[static_cast<Eigen::Index>(base | offsets[local])];
        }
        const Eigen::VectorXcd out = m * in;
        for (std::size_t local = 0; local < local_dim; ++local) {
            amps[static_cast<Eigen::Index>(base | offsets[local])] =
                out[static_cast<Eigen::Index>(local)];
        }
    }
}

} // namespace

StateVector::StateVector(int n_qubits, Amplitudes amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amplitudes_.size() != (Eigen::Index{1} << n_qubits)) {
        throw UsageError("amplitude vector length " + std::to_string(amplitudes_.size()) +
                         " does not match 2^" + std::to_string(n_qubits));
    }
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTolerance) {
        throw UsageError("state is not normalized");
    }
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw UsageError("inner product between states of different size");
    }
    return amplitudes_.dot(other.amplitudes_);
}

StateVector zero_state(int n_qubits) { return basis_state(n_qubits, 0); }

StateVector basis_state(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    const auto dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) {
        throw UsageError("basis index out of range");
    }
    Amplitudes amps = Amplitudes::Zero(static_cast<Eigen::Index>(dim));
    amps[static_cast<Eigen::Index>(index)] = 1.0;
    return {n_qubits, std::move(amps), StateVector::AssumeNormalized{}};
}

StateVector basis_state(std::string_view bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw UsageError("ket label must contain only 0 and 1");
        }
        index = (index << 1U) | static_cast<std::uint64_t>(c == '1');
    }
    return basis_state(static_cast<int>(bits.size()), index);
}

StateVector normalized_state(int n_qubits, Amplitudes amplitudes) {
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw UsageError("cannot normalize a zero or non-finite vector");
    }
    amplitudes /= norm;
    return {n_qubits, std::move(amplitudes)};
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::PauliRot:
        return "PAULIROT";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::X:
        return "X";
    case GateKind::H:
        return "H";
    case GateKind::Fixed:
        return "FIXED";
    }
    return "?";
}

void validate_gate(const Gate &gate, int n_qubits) {
    const auto name = std::string(gate_name(gate.kind));
    for (int q : gate.targets) {
        if (q < 0 || q >= n_qubits) {
            throw UsageError(name + " target " + std::to_string(q) + " outside register of " +
                             std::to_string(n_qubits) + " qubits");
        }
    }
    auto sorted = gate.targets;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw UsageError(name + " has repeated target qubits");
    }
    if (is_parameterized(gate.kind) != gate.parameter_slot.has_value()) {
        throw UsageError(name + (gate.parameter_slot ? " takes no parameter slot"
                                                     : " requires a parameter slot"));
    }
    std::size_t arity = 1;
    switch (gate.kind) {
    case GateKind::CNOT:
        arity = 2;
        break;
    case GateKind::PauliRot:
        arity = gate.pauli.size();
        if (arity == 0 || gate.pauli.find_first_not_of("XYZ") != std::string::npos) {
            throw UsageError("PAULIROT needs a non-empty string over {X, Y, Z}");
        }
        break;
    case GateKind::Fixed: {
        arity = gate.targets.size();
        const auto dim = Eigen::Index{1} << arity;
        if (arity < 1 || arity > 2 || gate.matrix.rows() != dim || gate.matrix.cols() != dim) {
            throw UsageError("fixed gate needs a 2x2 or 4x4 matrix matching its targets");
        }
        const Eigen::MatrixXcd should_be_identity = gate.matrix.adjoint() * gate.matrix;
        if (!should_be_identity.isIdentity(1e-10)) {
            throw UsageError("fixed gate matrix is not unitary");
        }
        break;
    }
    default:
        break;
    }
    if (gate.targets.size() != arity) {
        throw UsageError(name + " expects " + std::to_string(arity) + " target(s), got " +
                         std::to_string(gate.targets.size()));
    }
}

Eigen::MatrixXcd gate_matrix(const Gate &gate, std::optional<double> theta) {
    if (is_parameterized(gate.kind) != theta.has_value()) {
        throw UsageError(std::string(gate_name(gate.kind)) +
                         (theta ? " takes no angle" : " requires an angle"));
    }
    switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        return rotation_matrix(gate.kind, *theta);
    case GateKind::PauliRot: {
        const int k = static_cast<int>(gate.targets.size());
        std::vector<int> local(gate.targets.size());
        for (int j = 0; j < k; ++j) {
            local[static_cast<std::size_t>(j)] = j;
        }
        const auto masks = detail::pauli_masks(k, gate.pauli, local);
        const Eigen::Index dim = Eigen::Index{1} << k;
        Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);
        Eigen::MatrixXcd p(dim, dim);
        for (Eigen::Index col = 0; col < dim; ++col) {
            Amplitudes out(dim);
            detail::apply_pauli(out, identity.col(col), masks);
            p.col(col) = out;
        }
        return std::cos(*theta / 2.0) * identity - Complex{0.0, std::sin(*theta / 2.0)} * p;
    }
    case GateKind::CNOT: {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
        m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
        return m;
    }
    case GateKind::X: {
        Eigen::MatrixXcd m(2, 2);
        m << 0.0, 1.0, 1.0, 0.0;
        return m;
    }
    case GateKind::H: {
        Eigen::MatrixXcd m(2, 2);
        m << 1.0, 1.0, 1.0, -1.0;
        return m / std::numbers::sqrt2;
    }
    case GateKind::Fixed:
        return gate.matrix;
    }
    throw UsageError("unknown gate kind");
}

StateVector apply_gate(const StateVector &state, const Gate &gate, std::optional<double> theta) {
    validate_gate(gate, state.n_qubits());
    if (is_parameterized(gate.kind) != theta.has_value()) {
        throw UsageError(std::string(gate_name(gate.kind)) +
                         (theta ? " takes no angle" : " requires an angle"));
    }
    Amplitudes amps = state.amplitudes();
    detail::apply_gate_inplace(amps, state.n_qubits(), gate, theta.value_or(0.0));
    return {state.n_qubits(), std::move(amps), StateVector::AssumeNormalized{}};
}

namespace detail {

PauliMasks pauli_masks(int n_qubits, std::string_view letters, const std::vector<int> &qubits) {
    PauliMasks masks;
    for (std::size_t j = 0; j < letters.size(); ++j) {
        const auto bit = qubit_mask(n_qubits, qubits[j]);
        switch (letters[j]) {
        case 'X':
            masks.flip |= bit;
            break;
        case 'Y':
            masks.flip |= bit;
            masks.sign |= bit;
            ++masks.n_y;
            break;
        case 'Z':
            masks.sign |= bit;
            break;
        default:
            throw UsageError(std::string("unknown Pauli letter '") + letters[j] + "'");
        }
    }
    return masks;
}

void apply_pauli(Amplitudes &out, const Amplitudes &in, const PauliMasks &masks) {
    const Complex phase = i_power(masks.n_y);
    const auto dim = static_cast<std::uint64_t>(in.size());
    out.resize(in.size());
    for (std::uint64_t x = 0; x < dim; ++x) {
        const bool odd = (std::popcount(x & masks.sign) & 1) != 0;
        out[static_cast<Eigen::Index>(x ^ masks.flip)] =
            (odd ? -phase : phase) * in[static_cast<Eigen::Index>(x)];
    }
}

void apply_gate_inplace(Amplitudes &amps, int n_qubits, const Gate &gate, double theta) {
    switch (gate.kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
        apply_single(amps, qubit_mask(n_qubits, gate.targets[0]),
                     rotation_matrix(gate.kind, theta));
        return;
    case GateKind::PauliRot: {
        const auto masks = pauli_masks(n_qubits, gate.pauli, gate.targets);
        Amplitudes flipped;
        apply_pauli(flipped, amps, masks);
        amps = std::cos(theta / 2.0) * amps - Complex{0.0, std::sin(theta / 2.0)} * flipped;
        return;
    }
    case GateKind::CNOT: {
        const auto control = qubit_mask(n_qubits, gate.targets[0]);
        const auto target = qubit_mask(n_qubits, gate.targets[1]);
        const auto dim = static_cast<std::uint64_t>(amps.size());
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & control) != 0U && (i & target) == 0U) {
                std::swap(amps[static_cast<Eigen::Index>(i)],
                          amps[static_cast<Eigen::Index>(i | target)]);
            }
        }
        return;
    }
    case GateKind::X: {
        const auto mask = qubit_mask(n_qubits, gate.targets[0]);
        const auto dim = static_cast<std::uint64_t>(amps.size());
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & mask) == 0U) {
                std::swap(amps[static_cast<Eigen::Index>(i)],
                          amps[static_cast<Eigen::Index>(i | mask)]);
            }
        }
        return;
    }
    case GateKind::H:
        apply_single(amps, qubit_mask(n_qubits, gate.targets[0]),
                     gate_matrix(gate, std::nullopt));
        return;
    case GateKind::Fixed:
        if (gate.targets.size() == 1) {
            apply_single(amps, qubit_mask(n_qubits, gate.targets[0]), gate.matrix);
        }
        else {
            apply_dense(amps, n_qubits, gate.targets, gate.matrix);
        }
        return;
    }
}

} // namespace detail

} // namespace laws
