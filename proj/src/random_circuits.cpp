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

#include "qugan/random_circuits.hpp"

#include <numbers>
#include <set>

namespace qugan {

ParamCircuit random_pauli_circuit(int num_qubits, int num_params,
                                  std::mt19937_64& rng,
                                  bool with_fixed_gates) {
    ParamCircuit circuit(num_qubits, num_params);
    std::uniform_int_distribution<int> qubit_dist(0, num_qubits - 1);
    std::uniform_int_distribution<int> pauli_dist(0, 2);
    std::uniform_int_distribution<int> support_dist(
        1, std::min(3, num_qubits));
    std::uniform_int_distribution<int> fixed_dist(0, 3);

    auto random_string = [&] {
        const int support = support_dist(rng);
        std::map<int, Pauli> factors;
        while (static_cast<int>(factors.size()) < support) {
            factors.emplace(qubit_dist(rng),
                            static_cast<Pauli>(pauli_dist(rng)));
        }
        return PauliString(std::move(factors), num_qubits);
    };

    for (int p = 0; p < num_params; ++p) {
        circuit.add_rotation(random_string(), p);
        if (with_fixed_gates && p % 4 == 3) {
            switch (fixed_dist(rng)) {
            case 0:
                circuit.add_fixed(FixedGate::h(qubit_dist(rng)));
                break;
            case 1:
                circuit.add_fixed(FixedGate::x(qubit_dist(rng)));
                break;
            case 2: {
                if (num_qubits >= 2) {
                    int c = qubit_dist(rng);
                    int t = qubit_dist(rng);
                    while (t == c) {
                        t = qubit_dist(rng);
                    }
                    circuit.add_fixed(FixedGate::cnot(c, t));
                }
                break;
            }
            default:
                circuit.add_frozen_rotation(
                    random_string(),
                    std::uniform_real_distribution<double>(
                        -std::numbers::pi, std::numbers::pi)(rng));
                break;
            }
        }
    }
    circuit.validate();
    return circuit;
}

std::vector<double> random_parameters(int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-std::numbers::pi,
                                                std::numbers::pi);
    std::vector<double> out(count);
    for (double& x : out) {
        x = dist(rng);
    }
    return out;
}

}  // namespace qugan
