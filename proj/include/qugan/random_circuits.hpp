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

#include <random>

#include "qugan/circuit.hpp"

namespace qugan {

/// Circuit with `num_params` rotation gates on random Pauli-string
/// generators (support 1-3 qubits), interleaved with the occasional fixed
/// gate. Each parameter index is used exactly once, in order.
ParamCircuit random_pauli_circuit(int num_qubits, int num_params,
                                  std::mt19937_64& rng,
                                  bool with_fixed_gates = true);

/// Uniform angles in [-pi, pi].
std::vector<double> random_parameters(int count, std::mt19937_64& rng);

}  // namespace qugan
