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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "laws/state_vector.hpp"

namespace laws {

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };

/// coefficient * P_{q0} P_{q1} ..., identity on qubits not in the map.
struct PauliString {
    double coefficient = 0.0;
    std::map<int, Pauli> operators;

    [[nodiscard]] std::string to_string() const;
};

/// Real-weighted sum of Pauli strings. Hermitian by construction.
class PauliSumHamiltonian {
  public:
    PauliSumHamiltonian(int n_qubits, std::vector<PauliString> terms);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliString> &terms() const noexcept { return terms_; }

    /// H |psi>, term by term without forming a matrix.
    [[nodiscard]] Amplitudes apply(const Amplitudes &psi) const;

    /// 2^n x 2^n matrix. Only for oracles and small systems.
    [[nodiscard]] Eigen::MatrixXcd dense_matrix() const;

  private:
    int n_qubits_;
    std::vector<PauliString> terms_;
    std::vector<detail::PauliMasks> masks_;
};

/// Single-term observable, e.g. pauli_observable(3, "Z0 Z1").
[[nodiscard]] PauliSumHamiltonian pauli_observable(int n_qubits, const std::string &term,
                                                   double coefficient = 1.0);

/// Reads the one-term-per-line text format: "<coefficient> <P><q> ...".
/// Lines starting with '#' and blank lines are skipped. When \p n_qubits is
/// negative the register size is the largest referenced index plus one.
/// Throws IngestionError on malformed lines.
[[nodiscard]] PauliSumHamiltonian parse_hamiltonian(std::istream &in, int n_qubits = -1);
[[nodiscard]] PauliSumHamiltonian load_hamiltonian(const std::filesystem::path &path,
                                                   int n_qubits = -1);

/// <psi|H|psi>. Throws UsageError on size mismatch and NumericError if the
/// imaginary residue exceeds 1e-10.
[[nodiscard]] double expectation(const StateVector &state, const PauliSumHamiltonian &hamiltonian);

/// Smallest eigenvalue of the dense matrix. CapabilityError above 12 qubits.
[[nodiscard]] double exact_ground_energy(const PauliSumHamiltonian &hamiltonian);

inline constexpr int kMaxDiagonalizationQubits = 12;

} // namespace laws
