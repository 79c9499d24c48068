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

#include <cstdint>
#include <variant>
#include <vector>

#include "qugan/circuit.hpp"
#include "qugan/density_operator.hpp"
#include "qugan/observable.hpp"

namespace qugan {

/**
 * @brief One derivative of <P> with respect to the angle of a single gate.
 *
 * `target_gate` is the 1-based position of a parameter-bound ParamGate in
 * the circuit. The initial state may be pure or mixed; mixed states are
 * resolved through their spectral decomposition.
 */
struct GradientTask {
    ParamCircuit circuit;
    std::vector<double> params;
    std::variant<StateVector, DensityOperator> initial_state;
    Observable observable;
    int target_gate = 1;

    void validate() const;
};

/**
 * @brief Ancilla-extended circuit whose Grad-qubit <Z> yields a derivative.
 *
 * The ancilla is prepended as qubit 0 (every original qubit moves up by
 * one); it is opened with H, the generator and the observable are inserted
 * as controlled Pauli strings, and the ancilla is closed with W. With the
 * ancilla starting in |0>, scale * <Z>_Grad equals the analytic derivative.
 */
struct GradientCircuit {
    ParamCircuit extended;
    int grad_qubit = 0;
    double scale = 1.0;
    // extended 1-based position of each original gate (index 0 = gate 1)
    std::vector<int> position_map;
};

/// d<P>/d(theta_j) through the commutator form: for a pure initial state
/// |psi>, equals Im <A phi | h_j phi> with phi = U_{j:1}|psi> and
/// A = U_{j+1:N}^dag P U_{N:j+1}.
double analytic_gradient(const GradientTask& task);

/// Central difference ( <P>(theta_j + step) - <P>(theta_j - step) ) / (2 step).
double finite_difference_gradient(const GradientTask& task,
                                  double step = 1e-5);

/// Builds the ancilla gradient circuit. Requires Pauli-string generator and
/// observable; throws std::invalid_argument directing the caller to
/// analytic_gradient otherwise.
GradientCircuit build_gradient_circuit(const GradientTask& task);

/// Exact simulation of the gradient circuit: scale * <Z>_Grad.
double evaluate_gradient_circuit(const GradientCircuit& gc,
                                 std::span<const double> params,
                                 const StateVector& initial);
double evaluate_gradient_circuit(const GradientCircuit& gc,
                                 std::span<const double> params,
                                 const DensityOperator& initial);

/// build + evaluate in one call.
double circuit_gradient(const GradientTask& task);

/// Shot-based estimate scale * (count_0 - count_1) / shots from the ancilla.
double estimate_gradient_shots(const GradientTask& task, long long shots,
                               std::uint64_t seed);

/// d^2<P> / d(theta_k) d(theta_j), analytic (two commutator insertions).
double hessian_entry(const GradientTask& task, int second_gate);

/// Same entry through the doubled ancilla construction: the gradient
/// circuit of the gradient circuit, read on a second Grad qubit.
double hessian_entry_via_circuits(const GradientTask& task, int second_gate);

/// Expectation <P> for the task's circuit/state at the given parameters.
double task_expectation(const ParamCircuit& circuit,
                        std::span<const double> params,
                        const std::variant<StateVector, DensityOperator>& rho0,
                        const Observable& obs);

/// Gradient with respect to every parameter index; gates sharing an index
/// accumulate (chain rule through their angle scales).
std::vector<double> parameter_gradient(
    const ParamCircuit& circuit, std::span<const double> params,
    const std::variant<StateVector, DensityOperator>& rho0,
    const Observable& obs);

/// Dense parameter Hessian, symmetric.
std::vector<std::vector<double>> parameter_hessian(
    const ParamCircuit& circuit, std::span<const double> params,
    const std::variant<StateVector, DensityOperator>& rho0,
    const Observable& obs);

// Lower-level entry points used by the model layer; pure initial state.
double gate_gradient(const ParamCircuit& circuit,
                     std::span<const double> params, const StateVector& psi0,
                     const Observable& obs, int gate_position);

}  // namespace qugan
