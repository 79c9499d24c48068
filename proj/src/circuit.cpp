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

#include "qugan/circuit.hpp"

#include <stdexcept>
#include <string>

namespace qugan {

ParamCircuit::ParamCircuit(int num_qubits, int num_params)
    : num_qubits_(num_qubits), num_params_(num_params) {
    if (num_qubits < 0 || num_params < 0) {
        throw std::invalid_argument("ParamCircuit: negative size");
    }
}

const GateOp& ParamCircuit::gate(int position) const {
    if (position < 1 || position > size()) {
        throw std::invalid_argument("ParamCircuit: gate position " +
                                    std::to_string(position) +
                                    " out of range");
    }
    return gates_[position - 1];
}

bool ParamCircuit::gate_is_trainable(int position) const {
    const auto* pg = std::get_if<ParamGate>(&gate(position));
    return pg != nullptr && !pg->frozen();
}

void ParamCircuit::add(GateOp gate) {
    for (int t : gate_targets(gate)) {
        if (t < 0 || t >= num_qubits_) {
            throw std::invalid_argument("ParamCircuit: gate target " +
                                        std::to_string(t) + " out of range");
        }
    }
    if (const auto* pg = std::get_if<ParamGate>(&gate)) {
        if (!pg->frozen() && pg->param_index >= num_params_) {
            throw std::invalid_argument(
                "ParamCircuit: parameter index out of range");
        }
    }
    gates_.push_back(std::move(gate));
}

void ParamCircuit::add_rx(int qubit, int param_index) {
    add(ParamGate::bound(PauliString::single(Pauli::X, qubit, num_qubits_),
                         param_index));
}

void ParamCircuit::add_rz(int qubit, int param_index) {
    add(ParamGate::bound(PauliString::single(Pauli::Z, qubit, num_qubits_),
                         param_index));
}

void ParamCircuit::add_rzz(int qubit_a, int qubit_b, int param_index) {
    add(ParamGate::bound(
        PauliString({{qubit_a, Pauli::Z}, {qubit_b, Pauli::Z}}, num_qubits_),
        param_index));
}

void ParamCircuit::add_rotation(PauliString h, int param_index) {
    h.scope = num_qubits_;
    add(ParamGate::bound(std::move(h), param_index));
}

void ParamCircuit::add_frozen_rotation(PauliString h, double angle) {
    h.scope = num_qubits_;
    add(ParamGate::with_angle(std::move(h), angle));
}

void ParamCircuit::add_fixed(FixedGate gate) {
    add(GateOp(std::move(gate)));
}

void ParamCircuit::validate() const {
    std::vector<bool> used(num_params_, false);
    for (const GateOp& g : gates_) {
        for (int t : gate_targets(g)) {
            if (t < 0 || t >= num_qubits_) {
                throw std::invalid_argument(
                    "ParamCircuit: gate target out of range");
            }
        }
        if (const auto* pg = std::get_if<ParamGate>(&g)) {
            pg->generator.validate();
            if (!pg->frozen()) {
                if (pg->param_index >= num_params_) {
                    throw std::invalid_argument(
                        "ParamCircuit: parameter index out of range");
                }
                used[pg->param_index] = true;
            }
        }
    }
    for (int p = 0; p < num_params_; ++p) {
        if (!used[p]) {
            throw std::invalid_argument("ParamCircuit: parameter " +
                                        std::to_string(p) +
                                        " is not used by any gate");
        }
    }
}

ParamCircuit ParamCircuit::shifted(int offset, int new_num_qubits) const {
    ParamCircuit out(new_num_qubits, num_params_);
    for (const GateOp& g : gates_) {
        out.add(shifted_gate(g, offset, new_num_qubits));
    }
    return out;
}

ParamCircuit ParamCircuit::frozen(std::span<const double> params) const {
    check_params(params);
    ParamCircuit out(num_qubits_, 0);
    for (const GateOp& g : gates_) {
        out.add(frozen_gate(g, params));
    }
    return out;
}

void ParamCircuit::check_params(std::span<const double> params) const {
    if (static_cast<int>(params.size()) != num_params_) {
        throw std::invalid_argument(
            "ParamCircuit: expected " + std::to_string(num_params_) +
            " parameters, got " + std::to_string(params.size()));
    }
}

void ParamCircuit::apply_segment(StateVector& state,
                                 std::span<const double> params,
                                 int first_gate, int last_gate,
                                 bool adjoint) const {
    check_params(params);
    if (first_gate > last_gate) {
        return;  // empty segment
    }
    if (first_gate < 1 || last_gate > size()) {
        throw std::invalid_argument("apply_segment: gate range out of bounds");
    }
    if (!adjoint) {
        for (int g = first_gate; g <= last_gate; ++g) {
            apply_gate(state, gates_[g - 1], params, false);
        }
    } else {
        for (int g = last_gate; g >= first_gate; --g) {
            apply_gate(state, gates_[g - 1], params, true);
        }
    }
}

void ParamCircuit::apply(StateVector& state, std::span<const double> params,
                         bool adjoint) const {
    apply_segment(state, params, 1, size(), adjoint);
}

StateVector apply_segment(const ParamCircuit& circuit,
                          std::span<const double> params,
                          const StateVector& state, int first_gate,
                          int last_gate, bool adjoint) {
    StateVector out = state;
    circuit.apply_segment(out, params, first_gate, last_gate, adjoint);
    return out;
}

Matrix circuit_unitary(const ParamCircuit& circuit,
                       std::span<const double> params) {
    if (circuit.num_qubits() > 10) {
        throw std::invalid_argument(
            "circuit_unitary: register above 10 qubits, dense matrix "
            "refused");
    }
    const std::uint64_t dim = 1ull << circuit.num_qubits();
    Matrix u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        StateVector basis =
            StateVector::basis_state(circuit.num_qubits(), col);
        circuit.apply(basis, params);
        for (std::uint64_t row = 0; row < dim; ++row) {
            u(row, col) = basis.amplitude(row);
        }
    }
    return u;
}

}  // namespace qugan
