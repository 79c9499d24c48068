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

#include <map>
#include <string>
#include <vector>

#include "qugan/linalg.hpp"

namespace qugan {

enum class Pauli { X, Y, Z };

char pauli_char(Pauli p);

/**
 * @brief Tensor product of single-qubit Pauli operators.
 *
 * Qubits not listed in `factors` carry the identity. The empty string is
 * rejected: every gate generator must be a proper Pauli string so that
 * h^2 = I holds on its support.
 */
struct PauliString {
    std::map<int, Pauli> factors;  // qubit index -> factor
    int scope = 0;                 // number of qubits the string is defined on

    PauliString() = default;
    PauliString(std::map<int, Pauli> f, int scope_qubits);

    static PauliString single(Pauli p, int qubit, int scope_qubits);

    /// Throws std::invalid_argument if empty or out of range.
    void validate() const;

    /// Sorted list of qubits carrying a non-identity factor.
    std::vector<int> support() const;

    /// Dense 2^k matrix on the support, ordered by ascending qubit index.
    Matrix dense_matrix() const;

    /// Same factors with every qubit index shifted by `offset`.
    PauliString shifted(int offset, int new_scope) const;

    /// Copy with one extra factor; throws if the qubit already carries one.
    PauliString with_factor(int qubit, Pauli p) const;

    std::string str() const;  // e.g. "X0 Z2"

    bool operator==(const PauliString& other) const = default;
};

}  // namespace qugan
