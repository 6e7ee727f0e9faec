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

#include "laws/pauli.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "laws/errors.hpp"

namespace laws {

namespace {

detail::PauliMasks masks_for(int n_qubits, const PauliString &term) {
    std::string letters;
    std::vector<int> qubits;
    for (const auto &[q, p] : term.operators) {
        letters.push_back(static_cast<char>(p));
        qubits.push_back(q);
    }
    return detail::pauli_masks(n_qubits, letters, qubits);
}

PauliString parse_term(const std::string &line, std::size_t line_no) {
    std::istringstream tokens(line);
    PauliString term;
    std::string coeff;
    tokens >> coeff;
    try {
        std::size_t used = 0;
        term.coefficient = std::stod(coeff, &used);
        if (used != coeff.size()) {
            throw std::invalid_argument(coeff);
        }
    }
    catch (const std::exception &) {
        throw IngestionError("bad coefficient '" + coeff + "'", line_no);
    }
    if (!std::isfinite(term.coefficient)) {
        throw IngestionError("coefficient is not finite", line_no);
    }
    std::string op;
    while (tokens >> op) {
        if (op.size() < 2 || (op[0] != 'X' && op[0] != 'Y' && op[0] != 'Z') ||
            op.find_first_not_of("0123456789", 1) != std::string::npos) {
            throw IngestionError("bad Pauli factor '" + op + "'", line_no);
        }
        const int q = std::stoi(op.substr(1));
        if (!term.operators.emplace(q, static_cast<Pauli>(op[0])).second) {
            throw IngestionError("qubit " + std::to_string(q) + " appears twice in one term",
                                 line_no);
        }
    }
    return term;
}

} // namespace

std::string PauliString::to_string() const {
    std::ostringstream out;
    out.precision(17);
    out << coefficient;
    for (const auto &[q, p] : operators) {
        out << ' ' << static_cast<char>(p) << q;
    }
    return out.str();
}

PauliSumHamiltonian::PauliSumHamiltonian(int n_qubits, std::vector<PauliString> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ConfigurationError("hamiltonian qubit count out of range");
    }
    masks_.reserve(terms_.size());
    for (const auto &term : terms_) {
        if (!std::isfinite(term.coefficient)) {
            throw UsageError("non-finite Pauli coefficient");
        }
        for (const auto &[q, p] : term.operators) {
            if (q < 0 || q >= n_qubits) {
                throw UsageError("Pauli factor on qubit " + std::to_string(q) +
                                 " outside register of " + std::to_string(n_qubits));
            }
        }
        masks_.push_back(masks_for(n_qubits, term));
    }
}

Amplitudes PauliSumHamiltonian::apply(const Amplitudes &psi) const {
    Amplitudes result = Amplitudes::Zero(psi.size());
    Amplitudes scratch(psi.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        detail::apply_pauli(scratch, psi, masks_[i]);
        result += terms_[i].coefficient * scratch;
    }
    return result;
}

Eigen::MatrixXcd PauliSumHamiltonian::dense_matrix() const {
    const Eigen::Index dim = Eigen::Index{1} << n_qubits_;
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    Amplitudes column(dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
        column.setZero();
        column[c] = 1.0;
        h.col(c) = apply(column);
    }
    return h;
}

PauliSumHamiltonian pauli_observable(int n_qubits, const std::string &term, double coefficient) {
    std::ostringstream line;
    line.precision(17);
    line << coefficient << ' ' << term;
    std::vector<PauliString> terms{parse_term(line.str(), 1)};
    return {n_qubits, std::move(terms)};
}

PauliSumHamiltonian parse_hamiltonian(std::istream &in, int n_qubits) {
    std::vector<PauliString> terms;
    std::string line;
    std::size_t line_no = 0;
    int max_qubit = -1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        terms.push_back(parse_term(line, line_no));
        if (!terms.back().operators.empty()) {
            max_qubit = std::max(max_qubit, terms.back().operators.rbegin()->first);
        }
        if (n_qubits > 0 && max_qubit >= n_qubits) {
            throw IngestionError("qubit index " + std::to_string(max_qubit) +
                                     " outside register of " + std::to_string(n_qubits),
                                 line_no);
        }
    }
    if (terms.empty()) {
        throw IngestionError("hamiltonian has no terms", line_no);
    }
    return {n_qubits > 0 ? n_qubits : std::max(1, max_qubit + 1), std::move(terms)};
}

PauliSumHamiltonian load_hamiltonian(const std::filesystem::path &path, int n_qubits) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open hamiltonian file " + path.string());
    }
    return parse_hamiltonian(in, n_qubits);
}

double expectation(const StateVector &state, const PauliSumHamiltonian &hamiltonian) {
    if (state.n_qubits() != hamiltonian.n_qubits()) {
        throw UsageError("state has " + std::to_string(state.n_qubits()) +
                         " qubits, observable has " + std::to_string(hamiltonian.n_qubits()));
    }
    const Complex value = state.amplitudes().dot(hamiltonian.apply(state.amplitudes()));
    if (std::abs(value.imag()) > 1e-10) {
        throw NumericError("expectation value has imaginary residue " +
                           std::to_string(value.imag()));
    }
    return value.real();
}

double exact_ground_energy(const PauliSumHamiltonian &hamiltonian) {
    if (hamiltonian.n_qubits() > kMaxDiagonalizationQubits) {
        throw CapabilityError("dense diagonalization limited to " +
                              std::to_string(kMaxDiagonalizationQubits) + " qubits");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonian.dense_matrix(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericError("eigendecomposition failed");
    }
    return solver.eigenvalues()[0];
}

} // namespace laws
