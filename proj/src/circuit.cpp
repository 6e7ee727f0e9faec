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

#include "laws/circuit.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>

#include "laws/errors.hpp"
#include "laws/rng.hpp"

namespace laws {

namespace {

Gate ry_quarter_pi(int qubit) {
    Gate g = Gate::ry(qubit, 0);
    auto m = gate_matrix(g, std::numbers::pi / 4.0);
    return Gate::fixed(std::move(m), {qubit});
}

void append_chain(std::vector<Gate> &gates, int n_qubits) {
    for (int q = 0; q + 1 < n_qubits; ++q) {
        gates.push_back(Gate::cnot(q, q + 1));
    }
}

int parse_int(const std::string &token, std::size_t line_no) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(token, &used);
        if (used == token.size()) {
            return value;
        }
    }
    catch (const std::exception &) {
    }
    throw IngestionError("expected an integer, got '" + token + "'", line_no);
}

} // namespace

ParameterizedCircuit::ParameterizedCircuit(int n_qubits, std::vector<Gate> gates)
    : n_qubits_(n_qubits), gates_(std::move(gates)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigurationError("circuit qubit count out of range");
    }
    std::vector<int> uses;
    for (const auto &gate : gates_) {
        validate_gate(gate, n_qubits);
        if (gate.parameter_slot) {
            const auto slot = *gate.parameter_slot;
            if (slot >= uses.size()) {
                uses.resize(slot + 1, 0);
            }
            ++uses[slot];
        }
    }
    for (std::size_t slot = 0; slot < uses.size(); ++slot) {
        if (uses[slot] == 0) {
            throw UsageError("parameter slot " + std::to_string(slot) + " is never used");
        }
        if (uses[slot] > 1) {
            single_use_slots_ = false;
        }
    }
    n_params_ = uses.size();
}

ParameterizedCircuit build_hardware_efficient(int n_qubits, int n_layers,
                                              std::span<const GateKind> pattern,
                                              Entangler entangler) {
    if (n_layers < 1) {
        throw UsageError("hardware-efficient ansatz needs at least one layer");
    }
    if (pattern.empty()) {
        throw UsageError("rotation pattern is empty");
    }
    for (auto kind : pattern) {
        if (kind != GateKind::RX && kind != GateKind::RY && kind != GateKind::RZ) {
            throw UsageError("rotation pattern may contain only RX, RY, RZ");
        }
    }
    std::vector<Gate> gates;
    std::size_t slot = 0;
    for (int layer = 0; layer < n_layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            for (auto kind : pattern) {
                gates.push_back(Gate::rotation(kind, q, slot++));
            }
        }
        append_chain(gates, n_qubits);
        if (entangler == Entangler::Ring && n_qubits > 1) {
            gates.push_back(Gate::cnot(n_qubits - 1, 0));
        }
    }
    return {n_qubits, std::move(gates)};
}

ParameterizedCircuit build_random_pqc(int n_qubits, int n_params, std::uint64_t seed) {
    if (n_params < 1) {
        throw UsageError("random circuit needs at least one parameter");
    }
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigurationError("circuit qubit count out of range");
    }
    constexpr GateKind axes[] = {GateKind::RX, GateKind::RY, GateKind::RZ};
    Rng rng(seed);
    std::vector<Gate> gates;
    for (int q = 0; q < n_qubits; ++q) {
        gates.push_back(ry_quarter_pi(q));
    }
    for (int p = 0; p < n_params; ++p) {
        const int q = p % n_qubits;
        gates.push_back(Gate::rotation(axes[rng.below(3)], q, static_cast<std::size_t>(p)));
        if (q == n_qubits - 1) {
            append_chain(gates, n_qubits);
        }
    }
    return {n_qubits, std::move(gates)};
}

ParameterizedCircuit build_layered_random(int n_qubits, int n_layers, std::uint64_t seed) {
    if (n_layers < 1) {
        throw UsageError("layered circuit needs at least one layer");
    }
    return build_random_pqc(n_qubits, n_qubits * n_layers, seed);
}

ParameterizedCircuit build_h2_ansatz() {
    std::vector<Gate> gates{Gate::x(0), Gate::x(1),
                            Gate::pauli_rotation("XXXY", {0, 1, 2, 3}, 0)};
    return {4, std::move(gates)};
}

ParameterizedCircuit parse_circuit(std::istream &in, int n_qubits) {
    std::vector<Gate> gates;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::string name;
        if (!(tokens >> name)) {
            continue;
        }
        std::vector<std::string> args;
        for (std::string tok; tokens >> tok;) {
            args.push_back(tok);
        }
        std::optional<std::size_t> slot;
        if (!args.empty() && args.back().rfind("slot=", 0) == 0) {
            const int s = parse_int(args.back().substr(5), line_no);
            if (s < 0) {
                throw IngestionError("negative parameter slot", line_no);
            }
            slot = static_cast<std::size_t>(s);
            args.pop_back();
        }
        Gate gate;
        if (name == "RX" || name == "RY" || name == "RZ") {
            gate.kind = name == "RX" ? GateKind::RX : name == "RY" ? GateKind::RY : GateKind::RZ;
        }
        else if (name == "CNOT") {
            gate.kind = GateKind::CNOT;
        }
        else if (name == "X") {
            gate.kind = GateKind::X;
        }
        else if (name == "H") {
            gate.kind = GateKind::H;
        }
        else if (name == "PAULIROT") {
            gate.kind = GateKind::PauliRot;
            if (args.empty()) {
                throw IngestionError("PAULIROT needs a Pauli string", line_no);
            }
            gate.pauli = args.front();
            args.erase(args.begin());
        }
        else {
            throw IngestionError("unknown gate '" + name + "'", line_no);
        }
        for (const auto &arg : args) {
            gate.targets.push_back(parse_int(arg, line_no));
        }
        gate.parameter_slot = slot;
        try {
            validate_gate(gate, n_qubits);
        }
        catch (const UsageError &e) {
            throw IngestionError(e.what(), line_no);
        }
        gates.push_back(std::move(gate));
    }
    try {
        return {n_qubits, std::move(gates)};
    }
    catch (const UsageError &e) {
        throw IngestionError(e.what(), line_no);
    }
}

ParameterizedCircuit load_circuit(const std::filesystem::path &path, int n_qubits) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open circuit file " + path.string());
    }
    return parse_circuit(in, n_qubits);
}

StateVector evaluate_state(const ParameterizedCircuit &circuit, const ParameterVector &theta,
                           const StateVector &input) {
    if (static_cast<std::size_t>(theta.size()) != circuit.n_params()) {
        throw UsageError("theta has " + std::to_string(theta.size()) + " entries, circuit has " +
                         std::to_string(circuit.n_params()) + " parameters");
    }
    if (input.n_qubits() != circuit.n_qubits()) {
        throw UsageError("input state size does not match circuit");
    }
    Amplitudes amps = input.amplitudes();
    for (const auto &gate : circuit.gates()) {
        const double angle =
            gate.parameter_slot ? theta[static_cast<Eigen::Index>(*gate.parameter_slot)] : 0.0;
        detail::apply_gate_inplace(amps, circuit.n_qubits(), gate, angle);
    }
    return {circuit.n_qubits(), std::move(amps), StateVector::AssumeNormalized{}};
}

CostFunction::CostFunction(ParameterizedCircuit circuit, PauliSumHamiltonian observable)
    : CostFunction(circuit, std::move(observable), zero_state(circuit.n_qubits())) {}

CostFunction::CostFunction(ParameterizedCircuit circuit, PauliSumHamiltonian observable,
                           StateVector input_state)
    : circuit_(std::move(circuit)), observable_(std::move(observable)),
      input_(std::move(input_state)) {
    if (observable_.n_qubits() != circuit_.n_qubits() ||
        input_.n_qubits() != circuit_.n_qubits()) {
        throw UsageError("circuit, observable and input state sizes disagree");
    }
}

double cost(const CostFunction &cf, const ParameterVector &theta) {
    return expectation(evaluate_state(cf.circuit(), theta, cf.input_state()), cf.observable());
}

} // namespace laws
