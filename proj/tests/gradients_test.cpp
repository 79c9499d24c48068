// Copyright 2026 The qugansim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>

#include "qugan/ansatz.hpp"
#include "qugan/gradient.hpp"
#include "qugan/random_circuits.hpp"
#include "test_util.hpp"

using namespace qugan;

namespace {

// Single e^{-i theta X / 2} on one qubit measured in Z: <Z> = cos(theta).
GradientTask rx_z_task(double theta) {
    ParamCircuit circuit(1, 1);
    circuit.add_rx(0, 0);
    return GradientTask{std::move(circuit),
                        {theta},
                        StateVector(1),
                        Observable::pauli_z(0),
                        1};
}

}  // namespace

TEST_CASE("RX/Z derivative is -sin(theta)") {
    CHECK(std::abs(analytic_gradient(rx_z_task(0.0))) < 1e-12);
    CHECK(analytic_gradient(rx_z_task(std::numbers::pi / 2)) ==
          doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(analytic_gradient(rx_z_task(1.0)) ==
          doctest::Approx(-std::sin(1.0)).epsilon(1e-12));
}

TEST_CASE("analytic gradient rejects frozen and fixed gates") {
    ParamCircuit circuit(1, 1);
    circuit.add_frozen_rotation(PauliString::single(Pauli::X, 0, 1), 0.3);
    circuit.add_rx(0, 0);
    GradientTask task{std::move(circuit),
                      {0.2},
                      StateVector(1),
                      Observable::pauli_z(0),
                      1};
    CHECK_THROWS_AS(analytic_gradient(task), std::invalid_argument);
    task.target_gate = 2;
    CHECK_NOTHROW(analytic_gradient(task));
}

TEST_CASE("analytic gradient matches finite differences componentwise") {
    std::mt19937_64 rng(101);
    const ParamCircuit circuit = random_pauli_circuit(4, 10, rng);
    const std::vector<double> params = random_parameters(10, rng);
    const StateVector psi0 = testutil::random_state(4, rng);
    const Observable obs = Observable::pauli_z(1);

    for (int pos = 1; pos <= circuit.size(); ++pos) {
        if (!circuit.gate_is_trainable(pos)) {
            continue;
        }
        const GradientTask task{circuit, params, psi0, obs, pos};
        const double analytic = analytic_gradient(task);
        const double fd = finite_difference_gradient(task, 1e-5);
        CHECK(std::abs(analytic - fd) < 1e-8);
    }
}

TEST_CASE("gradient circuit reproduces the analytic value on RX/Z") {
    const GradientTask task = rx_z_task(std::numbers::pi / 2);
    const GradientCircuit gc = build_gradient_circuit(task);
    CHECK(gc.grad_qubit == 0);
    CHECK(gc.extended.num_qubits() == 2);
    CHECK(gc.scale == doctest::Approx(1.0));
    CHECK(circuit_gradient(task) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("commuting generators give vanishing gradients") {
    ParamCircuit circuit(2, 3);
    circuit.add_rz(0, 0);
    circuit.add_rz(1, 1);
    circuit.add_rzz(0, 1, 2);
    const std::vector<double> params{0.4, -0.9, 1.7};
    const Observable obs = Observable::pauli_z(0);
    for (int pos = 1; pos <= 3; ++pos) {
        const GradientTask task{circuit, params, StateVector(2), obs, pos};
        CHECK(std::abs(analytic_gradient(task)) < 1e-12);
        CHECK(std::abs(circuit_gradient(task)) < 1e-12);
    }
}

TEST_CASE("gradient circuits match analytic gradients on the ansatz") {
    std::mt19937_64 rng(103);
    const ParamCircuit circuit = build_ansatz(AnsatzSpec{2, 2});
    const std::vector<double> params = random_parameters(10, rng);
    const StateVector psi0(2);
    const Observable obs = Observable::pauli_z(0);
    for (int pos = 1; pos <= circuit.size(); ++pos) {
        const GradientTask task{circuit, params, psi0, obs, pos};
        CHECK(std::abs(analytic_gradient(task) - circuit_gradient(task)) <
              1e-9);
    }
}

TEST_CASE("gradient circuit refuses dense observables") {
    std::mt19937_64 rng(107);
    GradientTask task = rx_z_task(0.3);
    task.observable = Observable::dense(testutil::random_hermitian(2, rng),
                                        std::vector<int>{0});
    CHECK_THROWS_AS(build_gradient_circuit(task), std::invalid_argument);
    // the analytic path still works
    CHECK_NOTHROW(analytic_gradient(task));
}

TEST_CASE("three-way agreement on random circuits") {
    std::mt19937_64 rng(109);
    for (int trial = 0; trial < 5; ++trial) {
        const int nq = 2 + static_cast<int>(rng() % 4);  // 2..5 qubits
        const int np = 4 + static_cast<int>(rng() % 17); // 4..20 params
        const ParamCircuit circuit = random_pauli_circuit(nq, np, rng);
        const std::vector<double> params = random_parameters(np, rng);
        const StateVector psi0 = testutil::random_state(nq, rng);
        const Observable obs = Observable::pauli_z(
            static_cast<int>(rng() % static_cast<unsigned>(nq)));
        for (int pos = 1; pos <= circuit.size(); ++pos) {
            if (!circuit.gate_is_trainable(pos)) {
                continue;
            }
            const GradientTask task{circuit, params, psi0, obs, pos};
            const double a = analytic_gradient(task);
            const double c = circuit_gradient(task);
            const double f = finite_difference_gradient(task, 1e-5);
            CHECK(std::abs(a - c) < 1e-6);
            CHECK(std::abs(a - f) < 1e-6);
            CHECK(std::abs(c - f) < 1e-6);
        }
    }
}

TEST_CASE("mixed initial states resolve through the spectral decomposition") {
    std::mt19937_64 rng(113);
    const ParamCircuit circuit = random_pauli_circuit(2, 5, rng, false);
    const std::vector<double> params = random_parameters(5, rng);
    const Observable obs = Observable::pauli_z(0);

    const StateVector psi_a = testutil::random_state(2, rng);
    const StateVector psi_b = testutil::random_state(2, rng);
    const double w = 0.3;
    const DensityOperator mixed(
        2, w * outer_product(psi_a).matrix() +
               (1 - w) * outer_product(psi_b).matrix());

    for (int pos : {1, 3, 5}) {
        const GradientTask task_mixed{circuit, params, mixed, obs, pos};
        const GradientTask task_a{circuit, params, psi_a, obs, pos};
        const GradientTask task_b{circuit, params, psi_b, obs, pos};
        const double expected = w * analytic_gradient(task_a) +
                                (1 - w) * analytic_gradient(task_b);
        CHECK(analytic_gradient(task_mixed) ==
              doctest::Approx(expected).epsilon(1e-9));
        CHECK(circuit_gradient(task_mixed) ==
              doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("gradient is linear in the observable") {
    std::mt19937_64 rng(127);
    const ParamCircuit circuit = random_pauli_circuit(2, 6, rng, false);
    const std::vector<double> params = random_parameters(6, rng);
    const StateVector psi0 = testutil::random_state(2, rng);
    const Matrix p = testutil::random_hermitian(4, rng);
    const Matrix q = testutil::random_hermitian(4, rng);
    const double a = 0.8;
    const double b = -0.45;
    const std::vector<int> targets{0, 1};

    for (int pos : {2, 4}) {
        const GradientTask combined{
            circuit, params, psi0,
            Observable::dense(a * p + b * q, targets), pos};
        const GradientTask only_p{circuit, params, psi0,
                                  Observable::dense(p, targets), pos};
        const GradientTask only_q{circuit, params, psi0,
                                  Observable::dense(q, targets), pos};
        CHECK(analytic_gradient(combined) ==
              doctest::Approx(a * analytic_gradient(only_p) +
                              b * analytic_gradient(only_q))
                  .epsilon(1e-9));
    }
}

TEST_CASE("per-gate derivatives are local: freezing other gates changes "
          "nothing") {
    std::mt19937_64 rng(131);
    // circuit A: three bound rotations
    ParamCircuit a(2, 3);
    const PauliString g1 = PauliString::single(Pauli::X, 0, 2);
    const PauliString g2 = PauliString({{0, Pauli::Z}, {1, Pauli::Y}}, 2);
    const PauliString g3 = PauliString::single(Pauli::Y, 1, 2);
    a.add_rotation(g1, 0);
    a.add_rotation(g2, 1);
    a.add_rotation(g3, 2);
    const std::vector<double> theta{0.7, -1.2, 0.4};

    // circuit B: gate 2 frozen at its current angle
    ParamCircuit b(2, 2);
    b.add_rotation(g1, 0);
    b.add_frozen_rotation(g2, theta[1]);
    b.add_rotation(g3, 1);
    const std::vector<double> theta_b{theta[0], theta[2]};

    const StateVector psi0 = testutil::random_state(2, rng);
    const Observable obs = Observable::pauli_z(1);
    for (int pos : {1, 3}) {
        const GradientTask task_a{a, theta, psi0, obs, pos};
        const GradientTask task_b{b, theta_b, psi0, obs, pos};
        CHECK(analytic_gradient(task_a) ==
              doctest::Approx(analytic_gradient(task_b)).epsilon(1e-12));
    }
}

TEST_CASE("gates sharing a parameter accumulate in parameter_gradient") {
    ParamCircuit circuit(2, 1);
    circuit.add_rx(0, 0);
    circuit.add_rx(1, 0);  // same parameter drives both
    const std::vector<double> params{0.9};
    const StateVector psi0(2);
    const Observable obs =
        Observable::pauli(PauliString({{0, Pauli::Z}, {1, Pauli::Z}}, 2));

    const std::vector<double> grad =
        parameter_gradient(circuit, params, psi0, obs);
    REQUIRE(grad.size() == 1);
    // <Z0 Z1> = cos^2(theta), d/dtheta = -2 cos sin = -sin(2 theta)
    CHECK(grad[0] ==
          doctest::Approx(-std::sin(2 * params[0])).epsilon(1e-10));
}

TEST_CASE("finite differences of a constant observable vanish") {
    GradientTask task = rx_z_task(0.6);
    task.observable =
        Observable::dense(Matrix::Identity(2, 2), std::vector<int>{0});
    for (double step : {1e-3, 1e-5, 1e-7}) {
        CHECK(std::abs(finite_difference_gradient(task, step)) < 1e-9);
    }
    CHECK_THROWS_AS(finite_difference_gradient(task, 0.0),
                    std::invalid_argument);
}

TEST_CASE("finite differences track -sin at the stated step") {
    const double fd = finite_difference_gradient(rx_z_task(1.0), 1e-5);
    CHECK(std::abs(fd + std::sin(1.0)) < 1e-9);
}

TEST_CASE("finite differences obey the Taylor remainder bound") {
    std::mt19937_64 rng(137);
    for (int trial = 0; trial < 3; ++trial) {
        const ParamCircuit circuit = random_pauli_circuit(3, 8, rng);
        const std::vector<double> params = random_parameters(8, rng);
        const StateVector psi0 = testutil::random_state(3, rng);
        const Observable obs = Observable::pauli_z(0);
        const double step = 1e-3;
        for (int pos = 1; pos <= circuit.size(); ++pos) {
            if (!circuit.gate_is_trainable(pos)) {
                continue;
            }
            const GradientTask task{circuit, params, psi0, obs, pos};
            CHECK(std::abs(finite_difference_gradient(task, step) -
                           analytic_gradient(task)) < 10 * step * step);
        }
    }
}

TEST_CASE("Hessian of RX/Z at zero is -1") {
    const GradientTask task = rx_z_task(0.0);
    CHECK(hessian_entry(task, 1) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(hessian_entry_via_circuits(task, 1) ==
          doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("Hessian entries are symmetric, including the circuit route") {
    std::mt19937_64 rng(139);
    const ParamCircuit circuit = random_pauli_circuit(3, 6, rng, false);
    const std::vector<double> params = random_parameters(6, rng);
    const StateVector psi0 = testutil::random_state(3, rng);
    const Observable obs = Observable::pauli_z(1);
    for (int j = 1; j <= 6; ++j) {
        for (int k = j; k <= 6; ++k) {
            const GradientTask task_j{circuit, params, psi0, obs, j};
            const GradientTask task_k{circuit, params, psi0, obs, k};
            const double h_jk = hessian_entry(task_j, k);
            const double h_kj = hessian_entry(task_k, j);
            CHECK(std::abs(h_jk - h_kj) < 1e-9);
            CHECK(std::abs(hessian_entry_via_circuits(task_j, k) -
                           hessian_entry_via_circuits(task_k, j)) < 1e-9);
        }
    }
}

TEST_CASE("Hessian matches finite differences of the analytic gradient") {
    std::mt19937_64 rng(149);
    const ParamCircuit circuit = random_pauli_circuit(3, 6, rng);
    const std::vector<double> params = random_parameters(6, rng);
    const StateVector psi0 = testutil::random_state(3, rng);
    const Observable obs = Observable::pauli_z(2);
    const double step = 1e-4;

    std::vector<int> trainable;
    for (int pos = 1; pos <= circuit.size(); ++pos) {
        if (circuit.gate_is_trainable(pos)) {
            trainable.push_back(pos);
        }
    }
    for (int j : trainable) {
        for (int k : trainable) {
            const GradientTask task{circuit, params, psi0, obs, j};
            const double h = hessian_entry(task, k);
            const int pk =
                std::get<ParamGate>(circuit.gate(k)).param_index;
            std::vector<double> plus = params;
            std::vector<double> minus = params;
            plus[pk] += step;
            minus[pk] -= step;
            const double fd =
                (analytic_gradient({circuit, plus, psi0, obs, j}) -
                 analytic_gradient({circuit, minus, psi0, obs, j})) /
                (2 * step);
            CHECK(std::abs(h - fd) < 1e-6);
        }
    }
}

TEST_CASE("ancilla Hessian equals the analytic Hessian") {
    std::mt19937_64 rng(151);
    const ParamCircuit circuit = random_pauli_circuit(2, 5, rng, false);
    const std::vector<double> params = random_parameters(5, rng);
    const StateVector psi0 = testutil::random_state(2, rng);
    const Observable obs = Observable::pauli_z(0);
    for (int j : {1, 3}) {
        for (int k : {2, 5}) {
            const GradientTask task{circuit, params, psi0, obs, j};
            CHECK(hessian_entry_via_circuits(task, k) ==
                  doctest::Approx(hessian_entry(task, k)).epsilon(1e-9));
        }
    }
}

TEST_CASE("parameter_hessian is symmetric and matches entries") {
    std::mt19937_64 rng(157);
    const ParamCircuit circuit = random_pauli_circuit(2, 4, rng, false);
    const std::vector<double> params = random_parameters(4, rng);
    const StateVector psi0(2);
    const Observable obs = Observable::pauli_z(1);
    const auto hess = parameter_hessian(circuit, params, psi0, obs);
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            CHECK(hess[j][k] == doctest::Approx(hess[k][j]).epsilon(1e-12));
            const GradientTask task{circuit, params, psi0, obs, j + 1};
            CHECK(hess[j][k] ==
                  doctest::Approx(hessian_entry(task, k + 1))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("shot estimates are exact for deterministic ancilla outcomes") {
    const GradientTask task = rx_z_task(std::numbers::pi / 2);
    CHECK(estimate_gradient_shots(task, 10, 1) == doctest::Approx(-1.0));
    CHECK(estimate_gradient_shots(task, 1000, 99) == doctest::Approx(-1.0));
}

TEST_CASE("shot estimates concentrate at a million shots") {
    const GradientTask task = rx_z_task(std::numbers::pi / 2);
    const double est = estimate_gradient_shots(task, 1000000, 4242);
    CHECK(std::abs(est + 1.0) < 0.005);

    const GradientTask flat = rx_z_task(0.0);
    CHECK(std::abs(estimate_gradient_shots(flat, 1000000, 4242)) < 0.005);
}

TEST_CASE("the shot estimator is unbiased") {
    const GradientTask task = rx_z_task(1.0);
    const double exact = analytic_gradient(task);
    const int num_seeds = 200;
    const long long shots = 10000;
    double mean = 0;
    for (int seed = 0; seed < num_seeds; ++seed) {
        mean += estimate_gradient_shots(task, shots, 1000 + seed);
    }
    mean /= num_seeds;
    const double se = std::sqrt((1 - exact * exact) /
                                static_cast<double>(shots * num_seeds));
    CHECK(std::abs(mean - exact) < 4 * se);
}
