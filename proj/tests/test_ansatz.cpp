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

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <numbers>
#include <sstream>

#include "laws/circuit.hpp"
#include "laws/errors.hpp"
#include "laws/experiments.hpp"
#include "laws/pauli.hpp"
#include "support.hpp"

using namespace laws;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<GateKind> axes_of(const ParameterizedCircuit &c) {
    std::vector<GateKind> axes;
    for (const auto &g : c.gates()) {
        if (g.parameter_slot) {
            axes.push_back(g.kind);
        }
    }
    return axes;
}

int count_kind(const ParameterizedCircuit &c, GateKind kind) {
    int n = 0;
    for (const auto &g : c.gates()) {
        n += g.kind == kind ? 1 : 0;
    }
    return n;
}

ParameterizedCircuit random_mixed_circuit(int n, Rng &rng) {
    std::vector<Gate> gates;
    std::size_t slot = 0;
    for (int layer = 0; layer < 3; ++layer) {
        for (int q = 0; q < n; ++q) {
            const std::array<GateKind, 3> axes{GateKind::RX, GateKind::RY, GateKind::RZ};
            gates.push_back(Gate::rotation(axes[rng.below(3)], q, slot++));
        }
        for (int q = 0; q + 1 < n; ++q) {
            gates.push_back(Gate::cnot(q, q + 1));
        }
        if (n >= 2) {
            gates.push_back(Gate::h(static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))));
            gates.push_back(Gate::pauli_rotation("XY", {0, n - 1}, slot++));
        }
    }
    return {n, gates};
}

} // namespace

TEST_CASE("hardware-efficient construction", "[ansatz]") {
    const std::array<GateKind, 1> ry{GateKind::RY};
    const auto small = build_hardware_efficient(2, 1, ry, Entangler::Chain);
    REQUIRE(small.n_params() == 2);
    REQUIRE(small.gates().size() == 3);
    CHECK(small.gates()[0].kind == GateKind::RY);
    CHECK(small.gates()[0].targets == std::vector<int>{0});
    CHECK(small.gates()[0].parameter_slot == std::size_t{0});
    CHECK(small.gates()[1].kind == GateKind::RY);
    CHECK(small.gates()[1].targets == std::vector<int>{1});
    CHECK(small.gates()[1].parameter_slot == std::size_t{1});
    CHECK(small.gates()[2].kind == GateKind::CNOT);
    CHECK(small.gates()[2].targets == std::vector<int>{0, 1});

    const std::array<GateKind, 2> ryrz{GateKind::RY, GateKind::RZ};
    CHECK(build_hardware_efficient(3, 4, ryrz, Entangler::Ring).n_params() == 24);

    const std::array<GateKind, 3> xyz{GateKind::RX, GateKind::RY, GateKind::RZ};
    const auto ring = build_hardware_efficient(4, 2, xyz, Entangler::Ring);
    CHECK(ring.n_params() == 24);
    CHECK(count_kind(ring, GateKind::CNOT) == 8);

    CHECK_THROWS_AS(build_hardware_efficient(2, 0, ry, Entangler::Chain), UsageError);
    const std::array<GateKind, 1> bad{GateKind::CNOT};
    CHECK_THROWS_AS(build_hardware_efficient(2, 1, bad, Entangler::Chain), UsageError);
}

TEST_CASE("random PQC is seeded", "[ansatz]") {
    const auto a = build_random_pqc(3, 4, 7);
    const auto b = build_random_pqc(3, 4, 7);
    CHECK(a.n_params() == 4);
    CHECK(axes_of(a) == axes_of(b));
    REQUIRE(a.gates().size() == b.gates().size());
    for (std::size_t i = 0; i < a.gates().size(); ++i) {
        CHECK(a.gates()[i].kind == b.gates()[i].kind);
        CHECK(a.gates()[i].targets == b.gates()[i].targets);
    }

    int differ = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        differ += axes_of(build_random_pqc(3, 4, s)) != axes_of(build_random_pqc(3, 4, s + 1));
    }
    CHECK(differ >= 90);

    const auto single = build_random_pqc(1, 1, 12345);
    CHECK(single.n_params() == 1);
    CHECK(axes_of(single).size() == 1);
}

TEST_CASE("layered random circuits", "[ansatz]") {
    const auto c = build_layered_random(4, 3, 2);
    CHECK(c.n_params() == 12);
    CHECK(count_kind(c, GateKind::CNOT) == 9);
}

TEST_CASE("H2 ansatz starts at Hartree-Fock", "[ansatz]") {
    const auto h2 = load_h2_hamiltonian(default_data_dir() / "h2_sto3g.ham");
    const CostFunction cf(build_h2_ansatz(), h2);
    CHECK(cf.n_params() == 1);
    CHECK_THAT(cost(cf, ParameterVector::Zero(1)),
               WithinAbs(expectation(basis_state("1100"), h2), 1e-14));
    double best = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const double theta = -std::numbers::pi + 2.0 * std::numbers::pi * i / 2000.0;
        best = std::min(best, cost(cf, ParameterVector::Constant(1, theta)));
    }
    CHECK(best < exact_ground_energy(h2) + 1e-3);
}

TEST_CASE("circuit slot invariants", "[ansatz]") {
    CHECK_THROWS_AS(ParameterizedCircuit(2, {Gate::ry(0, 1)}), UsageError);
    const ParameterizedCircuit shared(2, {Gate::ry(0, 0), Gate::rz(1, 0)});
    CHECK(shared.n_params() == 1);
    CHECK_FALSE(shared.shift_rule_applicable());
    CHECK(build_random_pqc(3, 4, 1).shift_rule_applicable());
    CHECK_THROWS_AS(ParameterizedCircuit(2, {Gate::cnot(0, 2)}), UsageError);
}

TEST_CASE("evaluate_state examples", "[ansatz]") {
    Rng rng(4);
    const auto input = testing::random_state(2, rng);
    const ParameterizedCircuit rx_only(2, {Gate::rx(0, 0), Gate::rx(1, 1), Gate::rx(0, 2)});
    const auto out = evaluate_state(rx_only, ParameterVector::Zero(3), input);
    CHECK((out.amplitudes() - input.amplitudes()).norm() < 1e-15);

    const ParameterizedCircuit ry(1, {Gate::ry(0, 0)});
    const auto one = evaluate_state(ry, ParameterVector::Constant(1, std::numbers::pi),
                                    zero_state(1));
    CHECK(std::abs(one[1] - Complex{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(one[0]) < 1e-15);

    CHECK_THROWS_AS(evaluate_state(ry, ParameterVector::Zero(2), zero_state(1)), UsageError);
    CHECK_THROWS_AS(evaluate_state(ry, ParameterVector::Zero(1), zero_state(2)), UsageError);
}

TEST_CASE("evaluate_state agrees with the dense gate product", "[ansatz][oracle]") {
    Rng rng(99);
    for (int n = 1; n <= 4; ++n) {
        const auto circuit = random_mixed_circuit(n, rng);
        for (int draw = 0; draw < 100; ++draw) {
            const auto theta = testing::random_angles(circuit.n_params(), rng);
            const auto input = testing::random_state(n, rng);
            const Amplitudes expected = testing::dense_unitary(circuit, theta) * input.amplitudes();
            REQUIRE((evaluate_state(circuit, theta, input).amplitudes() - expected).norm() <
                    1e-10);
        }
    }
}

TEST_CASE("cost examples", "[ansatz]") {
    const ParameterizedCircuit rx(1, {Gate::rx(0, 0)});
    const CostFunction cf(rx, pauli_observable(1, "Z0"));
    CHECK_THAT(cost(cf, ParameterVector::Zero(1)), WithinAbs(1.0, 1e-15));
    CHECK_THAT(cost(cf, ParameterVector::Constant(1, std::numbers::pi / 3)), WithinAbs(0.5, 1e-14));
    for (double t : {-2.0, 0.1, 1.3, 2.9}) {
        CHECK_THAT(cost(cf, ParameterVector::Constant(1, t)), WithinAbs(std::cos(t), 1e-14));
    }
    CHECK_THROWS_AS(CostFunction(rx, pauli_observable(2, "Z0")), UsageError);
}

TEST_CASE("cost invariants", "[ansatz][property]") {
    Rng rng(17);
    const auto observable = random_pqc_observable();
    const double e0 = exact_ground_energy(observable);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const CostFunction cf(build_random_pqc(3, 6, seed), observable);
        for (int draw = 0; draw < 20; ++draw) {
            const auto theta = testing::random_angles(cf.n_params(), rng);
            const double c = cost(cf, theta);
            CHECK(c >= e0 - 1e-10);
            for (Eigen::Index i = 0; i < theta.size(); ++i) {
                ParameterVector shifted = theta;
                shifted[i] += 2.0 * std::numbers::pi;
                CHECK(std::abs(cost(cf, shifted) - c) < 1e-9);
            }
            const auto a = evaluate_state(cf.circuit(), theta, cf.input_state());
            const auto b = evaluate_state(cf.circuit(), theta, cf.input_state());
            CHECK(a.amplitudes() == b.amplitudes());
        }
    }
}

TEST_CASE("circuit text format", "[ansatz]") {
    std::istringstream in("# h2\nX 0\nX 1\nPAULIROT XXXY 0 1 2 3 slot=0\nRY 2 slot=1\n"
                          "CNOT 0 1  # entangle\nH 3\n");
    const auto c = parse_circuit(in, 4);
    CHECK(c.n_params() == 2);
    REQUIRE(c.gates().size() == 6);
    CHECK(c.gates()[2].kind == GateKind::PauliRot);
    CHECK(c.gates()[2].pauli == "XXXY");
    CHECK(c.gates()[4].kind == GateKind::CNOT);

    auto line_of = [](const std::string &text) {
        std::istringstream bad(text);
        try {
            (void)parse_circuit(bad, 2);
        } catch (const IngestionError &e) {
            return static_cast<long>(e.line());
        }
        return -1L;
    };
    CHECK(line_of("RY 0 slot=0\nFOO 1\n") == 2);
    CHECK(line_of("RY 0\n") == 1);
    CHECK(line_of("CNOT 0 0\n") == 1);
    CHECK(line_of("RX 5 slot=0\n") == 1);
    CHECK(line_of("RY 0 slot=-1\n") == 1);
    CHECK_THROWS_AS(load_circuit("/nonexistent.circ", 2), IoError);
}
