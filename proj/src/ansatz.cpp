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

#include "qugan/ansatz.hpp"

#include <stdexcept>

namespace qugan {

int AnsatzSpec::param_count() const {
    const int per_layer = 2 * num_qubits + std::max(num_qubits - 1, 0);
    return num_layers * per_layer;
}

ParamCircuit build_ansatz(const AnsatzSpec& spec) {
    if (spec.num_qubits < 1 || spec.num_layers < 1) {
        throw std::invalid_argument(
            "build_ansatz: need at least one qubit and one layer");
    }
    ParamCircuit circuit(spec.num_qubits, spec.param_count());
    int p = 0;
    for (int layer = 0; layer < spec.num_layers; ++layer) {
        for (int q = 0; q < spec.num_qubits; ++q) {
            circuit.add_rx(q, p++);
        }
        for (int q = 0; q < spec.num_qubits; ++q) {
            circuit.add_rz(q, p++);
        }
        for (int q = 0; q + 1 < spec.num_qubits; q += 2) {
            circuit.add_rzz(q, q + 1, p++);
        }
        for (int q = 1; q + 1 < spec.num_qubits; q += 2) {
            circuit.add_rzz(q, q + 1, p++);
        }
    }
    circuit.validate();
    return circuit;
}

}  // namespace qugan
