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

#include <iosfwd>
#include <string>

#include "qugan/circuit.hpp"
#include "qugan/observable.hpp"

namespace qugan {

/**
 * @brief Plain-text circuit format, one gate per line.
 *
 *   QUBITS <n>
 *   PARAMS <m>
 *   GATE RX <q> (p<k> | <angle>)        single-qubit X rotation
 *   GATE RY <q> ...                     Y rotation
 *   GATE RZ <q> ...                     Z rotation
 *   GATE RZZ <q1> <q2> ...              nearest-neighbor ZZ rotation
 *   GATE R <X0> <Z2> ... (p<k>|angle)   general Pauli-string rotation
 *   GATE H|X|Z|W <q>
 *   GATE CNOT <control> <target>
 *   OBS <X0> <Z2> ...                   measured Pauli string (default Z0)
 *
 * `p<k>` binds the gate to parameter k; a bare number freezes the angle in
 * radians. Lines starting with '#' and blank lines are ignored.
 */
struct CircuitFile {
    ParamCircuit circuit;
    Observable observable;
};

/// Throws std::runtime_error with a line diagnostic on malformed input.
CircuitFile parse_circuit_file(std::istream& in);
CircuitFile load_circuit_file(const std::string& path);

std::string serialize_circuit(const ParamCircuit& circuit,
                              const Observable& observable);

}  // namespace qugan
