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

#pragma once

#include "qugan/circuit.hpp"

namespace qugan {

/// Layered hardware-efficient ansatz shape: `num_layers` layers on
/// `num_qubits` qubits, each layer contributing X rotations, Z rotations
/// and two staggered sets of nearest-neighbor ZZ rotations.
struct AnsatzSpec {
    int num_qubits = 1;
    int num_layers = 1;

    /// layers * (2*qubits + max(qubits-1, 0))
    int param_count() const;
};

/**
 * @brief Builds the layered ansatz with fresh parameters per layer.
 *
 * Per layer, in order: an X rotation on every qubit, a Z rotation on every
 * qubit, then ZZ rotations on the odd pairs (1,2),(3,4),... followed by the
 * even pairs (2,3),(4,5),... Parameter indices are assigned in exactly that
 * order, layer by layer. A single-qubit ansatz emits no ZZ rotations.
 */
ParamCircuit build_ansatz(const AnsatzSpec& spec);

}  // namespace qugan
