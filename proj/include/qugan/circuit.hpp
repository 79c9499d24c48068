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
#include <vector>

#include "qugan/gates.hpp"

namespace qugan {

/**
 * @brief Time-ordered sequence of parametrized and fixed gates.
 *
 * Gates are 1-indexed to match the ordered segment notation: the full
 * circuit applies gate 1 first and gate N last. Circuits are immutable
 * after construction in the sense that evaluation never mutates them;
 * concurrent evaluation with distinct parameter vectors is safe.
 */
class ParamCircuit {
  public:
    ParamCircuit() = default;
    ParamCircuit(int num_qubits, int num_params);

    int num_qubits() const { return num_qubits_; }
    int num_params() const { return num_params_; }
    int size() const { return static_cast<int>(gates_.size()); }
    const std::vector<GateOp>& gates() const { return gates_; }

    /// 1-based access.
    const GateOp& gate(int position) const;

    /// True when `position` holds a parameter-bound ParamGate.
    bool gate_is_trainable(int position) const;

    void add(GateOp gate);
    void add_rx(int qubit, int param_index);
    void add_rz(int qubit, int param_index);
    void add_rzz(int qubit_a, int qubit_b, int param_index);
    void add_rotation(PauliString h, int param_index);
    void add_frozen_rotation(PauliString h, double angle);
    void add_fixed(FixedGate gate);

    /// Checks target ranges, parameter indices and that every parameter
    /// index is used by at least one gate.
    void validate() const;

    /// Same circuit with every qubit index raised by `offset` on a register
    /// of `new_num_qubits` qubits.
    ParamCircuit shifted(int offset, int new_num_qubits) const;

    /// Copy with every bound gate frozen at its resolved angle.
    ParamCircuit frozen(std::span<const double> params) const;

    /// Applies gates first_gate..last_gate (1-based, inclusive) in time
    /// order, or their adjoints in reverse order. first_gate > last_gate is
    /// the empty segment.
    void apply_segment(StateVector& state, std::span<const double> params,
                       int first_gate, int last_gate,
                       bool adjoint = false) const;

    /// Full circuit U = U_{N:1} (or its adjoint).
    void apply(StateVector& state, std::span<const double> params,
               bool adjoint = false) const;

  private:
    int num_qubits_ = 0;
    int num_params_ = 0;
    std::vector<GateOp> gates_;

    void check_params(std::span<const double> params) const;
};

/// Pure variant of apply_segment: returns a new state.
StateVector apply_segment(const ParamCircuit& circuit,
                          std::span<const double> params,
                          const StateVector& state, int first_gate,
                          int last_gate, bool adjoint = false);

/// Full 2^q x 2^q matrix of the circuit; refuses registers above 10 qubits.
Matrix circuit_unitary(const ParamCircuit& circuit,
                       std::span<const double> params);

}  // namespace qugan
