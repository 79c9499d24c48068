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

#include "qugan/gradient.hpp"

#include <cmath>
#include <stdexcept>

namespace qugan {

namespace {

constexpr double kSpectralCutoff = 1e-14;

const ParamGate& trainable_gate(const ParamCircuit& circuit, int position) {
    const GateOp& g = circuit.gate(position);
    const auto* pg = std::get_if<ParamGate>(&g);
    if (pg == nullptr || pg->frozen()) {
        throw std::invalid_argument(
            "gradient: gate " + std::to_string(position) +
            " is not a parameter-bound gate");
    }
    return *pg;
}

// Spectral decomposition of a mixed initial state into weighted pure states.
std::vector<std::pair<double, StateVector>> decompose(
    const DensityOperator& rho) {
    const EigenSystem es = hermitian_eigensystem(rho.matrix());
    std::vector<std::pair<double, StateVector>> parts;
    for (Eigen::Index i = 0; i < es.values.size(); ++i) {
        const double p = es.values(i);
        if (p <= kSpectralCutoff) {
            continue;
        }
        std::vector<cx> amps(rho.dim());
        double norm = 0;
        for (std::uint64_t r = 0; r < rho.dim(); ++r) {
            amps[r] = es.vectors(r, i);
            norm += std::norm(amps[r]);
        }
        norm = std::sqrt(norm);
        for (cx& a : amps) {
            a /= norm;
        }
        parts.emplace_back(
            p, StateVector::from_amplitudes(rho.num_qubits(), std::move(amps)));
    }
    return parts;
}

template <typename Fn>
double over_initial_state(
    const std::variant<StateVector, DensityOperator>& rho0, Fn&& fn) {
    if (const auto* psi = std::get_if<StateVector>(&rho0)) {
        return fn(*psi);
    }
    const auto& rho = std::get<DensityOperator>(rho0);
    double acc = 0;
    for (const auto& [weight, psi] : decompose(rho)) {
        acc += weight * fn(psi);
    }
    return acc;
}

void apply_observable(StateVector& state, const Observable& obs) {
    if (obs.pauli_string()) {
        PauliString p = *obs.pauli_string();
        p.scope = state.num_qubits();
        state.apply_pauli(p);
    } else {
        state.apply_matrix(obs.matrix(), obs.targets());
    }
}

// A|phi> with A = U_{j+1:N}^dag P U_{N:j+1}
StateVector conjugated_observable_apply(const ParamCircuit& circuit,
                                        std::span<const double> params,
                                        const Observable& obs,
                                        const StateVector& phi, int j) {
    StateVector a = phi;
    circuit.apply_segment(a, params, j + 1, circuit.size());
    apply_observable(a, obs);
    circuit.apply_segment(a, params, j + 1, circuit.size(), true);
    return a;
}

double gate_gradient_pure(const ParamCircuit& circuit,
                          std::span<const double> params,
                          const StateVector& psi0, const Observable& obs,
                          int j) {
    const ParamGate& pg = trainable_gate(circuit, j);

    StateVector phi = psi0;
    circuit.apply_segment(phi, params, 1, j);

    StateVector phi_h = phi;
    phi_h.apply_pauli(pg.generator);

    const StateVector a =
        conjugated_observable_apply(circuit, params, obs, phi, j);

    // -(i/2) tr(rho [A, h]) = Im <A phi | h phi> for a pure state
    return pg.param_scale * a.inner_product(phi_h).imag();
}

double hessian_entry_pure(const ParamCircuit& circuit,
                          std::span<const double> params,
                          const StateVector& psi0, const Observable& obs,
                          int j, int k) {
    const ParamGate& gj = trainable_gate(circuit, j);
    const ParamGate& gk = trainable_gate(circuit, k);
    const int n = circuit.size();
    const int lo = std::min(j, k);
    const int hi = std::max(j, k);
    const PauliString& h_lo =
        (lo == j) ? gj.generator : gk.generator;
    const PauliString& h_hi =
        (hi == j) ? gj.generator : gk.generator;

    StateVector u = psi0;
    circuit.apply(u, params);

    // single insertions, prefactors (-i s/2) tracked outside
    auto inserted = [&](int pos, const PauliString& h) {
        StateVector d = psi0;
        circuit.apply_segment(d, params, 1, pos);
        d.apply_pauli(h);
        circuit.apply_segment(d, params, pos + 1, n);
        return d;
    };
    const StateVector dj = inserted(j, gj.generator);
    const StateVector dk = (j == k) ? dj : inserted(k, gk.generator);

    // double insertion at (lo, hi)
    StateVector dd = psi0;
    circuit.apply_segment(dd, params, 1, lo);
    dd.apply_pauli(h_lo);
    circuit.apply_segment(dd, params, lo + 1, hi);
    dd.apply_pauli(h_hi);
    circuit.apply_segment(dd, params, hi + 1, n);

    StateVector pdj = dj;
    apply_observable(pdj, obs);
    StateVector pdd = dd;
    apply_observable(pdd, obs);

    const double term1 = dk.inner_product(pdj).real();
    const double term2 = u.inner_product(pdd).real();
    return gj.param_scale * gk.param_scale * 0.5 * (term1 - term2);
}

}  // namespace

void GradientTask::validate() const {
    circuit.validate();
    if (static_cast<int>(params.size()) != circuit.num_params()) {
        throw std::invalid_argument("GradientTask: parameter count mismatch");
    }
    trainable_gate(circuit, target_gate);
    const int state_qubits =
        std::holds_alternative<StateVector>(initial_state)
            ? std::get<StateVector>(initial_state).num_qubits()
            : std::get<DensityOperator>(initial_state).num_qubits();
    if (state_qubits != circuit.num_qubits()) {
        throw std::invalid_argument(
            "GradientTask: state and circuit qubit counts differ");
    }
}

double analytic_gradient(const GradientTask& task) {
    task.validate();
    return over_initial_state(task.initial_state, [&](const StateVector& psi) {
        return gate_gradient_pure(task.circuit, task.params, psi,
                                  task.observable, task.target_gate);
    });
}

double task_expectation(
    const ParamCircuit& circuit, std::span<const double> params,
    const std::variant<StateVector, DensityOperator>& rho0,
    const Observable& obs) {
    return over_initial_state(rho0, [&](const StateVector& psi) {
        StateVector evolved = psi;
        circuit.apply(evolved, params);
        return expectation(evolved, obs);
    });
}

double finite_difference_gradient(const GradientTask& task, double step) {
    if (step <= 0) {
        throw std::invalid_argument(
            "finite_difference_gradient: step must be positive");
    }
    const ParamGate& pg = trainable_gate(task.circuit, task.target_gate);
    // Shift only the targeted gate's angle: freeze it at theta +- step.
    auto shifted_expectation = [&](double delta) {
        ParamCircuit shifted(task.circuit.num_qubits(),
                             task.circuit.num_params());
        const double theta = pg.angle(task.params);
        for (int pos = 1; pos <= task.circuit.size(); ++pos) {
            if (pos == task.target_gate) {
                shifted.add(
                    ParamGate::with_angle(pg.generator, theta + delta));
            } else {
                shifted.add(task.circuit.gate(pos));
            }
        }
        return over_initial_state(
            task.initial_state, [&](const StateVector& psi) {
                StateVector evolved = psi;
                shifted.apply(evolved, task.params);
                return expectation(evolved, task.observable);
            });
    };
    // d<P>/d(param) = scale * d<P>/d(angle)
    return pg.param_scale *
           (shifted_expectation(step) - shifted_expectation(-step)) /
           (2 * step);
}

GradientCircuit build_gradient_circuit(const GradientTask& task) {
    task.validate();
    const ParamGate& pg = trainable_gate(task.circuit, task.target_gate);
    if (!task.observable.pauli_string()) {
        throw std::invalid_argument(
            "build_gradient_circuit: observable is not a Pauli string; use "
            "analytic_gradient for dense observables");
    }
    const int nq = task.circuit.num_qubits() + 1;
    const int j = task.target_gate;

    GradientCircuit gc;
    gc.extended = ParamCircuit(nq, task.circuit.num_params());
    gc.grad_qubit = 0;
    gc.scale = pg.param_scale;
    gc.position_map.resize(task.circuit.size());

    gc.extended.add_fixed(FixedGate::h(0));
    for (int pos = 1; pos <= j; ++pos) {
        gc.extended.add(shifted_gate(task.circuit.gate(pos), 1, nq));
        gc.position_map[pos - 1] = gc.extended.size();
    }
    gc.extended.add_fixed(
        FixedGate::controlled_pauli(0, pg.generator.shifted(1, nq)));
    for (int pos = j + 1; pos <= task.circuit.size(); ++pos) {
        gc.extended.add(shifted_gate(task.circuit.gate(pos), 1, nq));
        gc.position_map[pos - 1] = gc.extended.size();
    }
    PauliString p_obs = *task.observable.pauli_string();
    p_obs.scope = task.circuit.num_qubits();
    gc.extended.add_fixed(
        FixedGate::controlled_pauli(0, p_obs.shifted(1, nq)));
    gc.extended.add_fixed(FixedGate::w(0));
    return gc;
}

double evaluate_gradient_circuit(const GradientCircuit& gc,
                                 std::span<const double> params,
                                 const StateVector& initial) {
    StateVector full = StateVector(1).tensor(initial);
    gc.extended.apply(full, params);
    const double z = 2 * full.prob_zero(gc.grad_qubit) - 1;
    return gc.scale * z;
}

double evaluate_gradient_circuit(const GradientCircuit& gc,
                                 std::span<const double> params,
                                 const DensityOperator& initial) {
    double acc = 0;
    for (const auto& [weight, psi] : decompose(initial)) {
        acc += weight * evaluate_gradient_circuit(gc, params, psi);
    }
    return acc;
}

double circuit_gradient(const GradientTask& task) {
    const GradientCircuit gc = build_gradient_circuit(task);
    return over_initial_state(task.initial_state, [&](const StateVector& psi) {
        return evaluate_gradient_circuit(gc, task.params, psi);
    });
}

double estimate_gradient_shots(const GradientTask& task, long long shots,
                               std::uint64_t seed) {
    const GradientCircuit gc = build_gradient_circuit(task);
    // Exact ancilla marginal, then one binomial draw over all shots.
    double p0 = 0;
    if (const auto* psi = std::get_if<StateVector>(&task.initial_state)) {
        StateVector full = StateVector(1).tensor(*psi);
        gc.extended.apply(full, task.params);
        p0 = full.prob_zero(gc.grad_qubit);
    } else {
        const auto& rho = std::get<DensityOperator>(task.initial_state);
        for (const auto& [weight, psi] : decompose(rho)) {
            StateVector full = StateVector(1).tensor(psi);
            gc.extended.apply(full, task.params);
            p0 += weight * full.prob_zero(gc.grad_qubit);
        }
    }
    p0 = std::min(1.0, std::max(0.0, p0));
    StateVector ancilla = StateVector::from_amplitudes(
        1, {cx(std::sqrt(p0), 0), cx(std::sqrt(1.0 - p0), 0)});
    const ShotCounts counts = sample_z_basis(ancilla, 0, shots, seed);
    return gc.scale *
           static_cast<double>(counts.zeros - counts.ones) /
           static_cast<double>(shots);
}

double hessian_entry(const GradientTask& task, int second_gate) {
    task.validate();
    trainable_gate(task.circuit, second_gate);
    return over_initial_state(task.initial_state, [&](const StateVector& psi) {
        return hessian_entry_pure(task.circuit, task.params, psi,
                                  task.observable, task.target_gate,
                                  second_gate);
    });
}

double hessian_entry_via_circuits(const GradientTask& task, int second_gate) {
    task.validate();
    trainable_gate(task.circuit, second_gate);
    const GradientCircuit inner = build_gradient_circuit(task);
    const int outer_target = inner.position_map[second_gate - 1];

    auto entry_for = [&](const StateVector& psi) {
        GradientTask outer{inner.extended, task.params,
                           StateVector(1).tensor(psi),
                           Observable::pauli_z(inner.grad_qubit),
                           outer_target};
        const GradientCircuit doubled = build_gradient_circuit(outer);
        return inner.scale *
               evaluate_gradient_circuit(
                   doubled, task.params,
                   std::get<StateVector>(outer.initial_state));
    };
    return over_initial_state(task.initial_state, entry_for);
}

std::vector<double> parameter_gradient(
    const ParamCircuit& circuit, std::span<const double> params,
    const std::variant<StateVector, DensityOperator>& rho0,
    const Observable& obs) {
    std::vector<double> grad(circuit.num_params(), 0.0);
    for (int pos = 1; pos <= circuit.size(); ++pos) {
        if (!circuit.gate_is_trainable(pos)) {
            continue;
        }
        const auto& pg = std::get<ParamGate>(circuit.gate(pos));
        const double g = over_initial_state(rho0, [&](const StateVector& psi) {
            return gate_gradient_pure(circuit, params, psi, obs, pos);
        });
        grad[pg.param_index] += g;
    }
    return grad;
}

std::vector<std::vector<double>> parameter_hessian(
    const ParamCircuit& circuit, std::span<const double> params,
    const std::variant<StateVector, DensityOperator>& rho0,
    const Observable& obs) {
    const int np = circuit.num_params();
    std::vector<std::vector<double>> hess(np, std::vector<double>(np, 0.0));
    std::vector<int> trainable;
    for (int pos = 1; pos <= circuit.size(); ++pos) {
        if (circuit.gate_is_trainable(pos)) {
            trainable.push_back(pos);
        }
    }
    for (std::size_t ia = 0; ia < trainable.size(); ++ia) {
        for (std::size_t ib = ia; ib < trainable.size(); ++ib) {
            const int a = trainable[ia];
            const int b = trainable[ib];
            const double e =
                over_initial_state(rho0, [&](const StateVector& psi) {
                    return hessian_entry_pure(circuit, params, psi, obs, a,
                                              b);
                });
            const int pa = std::get<ParamGate>(circuit.gate(a)).param_index;
            const int pb = std::get<ParamGate>(circuit.gate(b)).param_index;
            hess[pa][pb] += e;
            if (ia != ib) {
                hess[pb][pa] += e;
            }
        }
    }
    return hess;
}

double gate_gradient(const ParamCircuit& circuit,
                     std::span<const double> params, const StateVector& psi0,
                     const Observable& obs, int gate_position) {
    return gate_gradient_pure(circuit, params, psi0, obs, gate_position);
}

}  // namespace qugan
