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

#include <span>
#include <variant>
#include <vector>

#include "qugan/linalg.hpp"
#include "qugan/pauli_string.hpp"
#include "qugan/state_vector.hpp"

namespace qugan {

/**
 * @brief Pauli rotation e^{-i theta h / 2}.
 *
 * The angle is either bound to a parameter (theta = param_scale *
 * params[param_index]) or frozen. Frozen gates do not consume parameter
 * indices, which lets fixed circuit elements share the same IR.
 */
struct ParamGate {
    PauliString generator;
    int param_index = -1;  // < 0 means frozen
    double frozen_angle = 0.0;
    double param_scale = 1.0;

    bool frozen() const { return param_index < 0; }

    double angle(std::span<const double> params) const {
        return frozen() ? frozen_angle
                        : param_scale * params[param_index];
    }

    static ParamGate bound(PauliString h, int param_index,
                           double scale = 1.0);
    static ParamGate with_angle(PauliString h, double angle);
};

/// Non-parametrized circuit elements.
struct FixedGate {
    enum class Kind { H, X, Z, W, CNOT, ControlledPauli };

    Kind kind;
    int target = -1;   // H, X, Z, W
    int control = -1;  // CNOT, ControlledPauli
    PauliString pauli; // ControlledPauli

    static FixedGate h(int qubit);
    static FixedGate x(int qubit);
    static FixedGate z(int qubit);
    static FixedGate w(int qubit);
    static FixedGate cnot(int control, int target);
    static FixedGate controlled_pauli(int control, PauliString p);
};

using GateOp = std::variant<ParamGate, FixedGate>;

/// Applies the gate in place; `adjoint` applies the inverse.
void apply_gate(StateVector& state, const GateOp& gate,
                std::span<const double> params, bool adjoint = false);

/// Sorted qubits the gate touches (controls included).
std::vector<int> gate_targets(const GateOp& gate);

/// Dense matrix of the gate on gate_targets(gate) (ascending order, first
/// qubit = most significant sub-bit).
Matrix gate_matrix(const GateOp& gate, std::span<const double> params);

/// Raises every qubit index by `offset`; Pauli scopes grow to `new_scope`.
GateOp shifted_gate(const GateOp& gate, int offset, int new_scope);

/// Replaces a bound ParamGate by a frozen copy at the resolved angle.
GateOp frozen_gate(const GateOp& gate, std::span<const double> params);

/**
 * @brief Gate sequence realizing |0><0|_c (x) I + |1><1|_c (x) U.
 *
 * Supported inputs: any ParamGate (split into two commuting Pauli
 * rotations), and the fixed gates X, Z, W and H. Controlling an already
 * controlled gate is not supported and throws std::invalid_argument, as
 * does a control/target collision.
 */
std::vector<GateOp> controlled(const GateOp& gate, int control);

Matrix w_gate_matrix();
Matrix hadamard_matrix();

}  // namespace qugan
