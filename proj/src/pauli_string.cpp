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

#include "qugan/pauli_string.hpp"

#include <stdexcept>

namespace qugan {

namespace {

Matrix single_pauli_matrix(Pauli p) {
    Matrix m(2, 2);
    switch (p) {
    case Pauli::X:
        m << cx(0, 0), cx(1, 0), cx(1, 0), cx(0, 0);
        break;
    case Pauli::Y:
        m << cx(0, 0), cx(0, -1), cx(0, 1), cx(0, 0);
        break;
    case Pauli::Z:
        m << cx(1, 0), cx(0, 0), cx(0, 0), cx(-1, 0);
        break;
    }
    return m;
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    case Pauli::Z:
        return 'Z';
    }
    return '?';
}

PauliString::PauliString(std::map<int, Pauli> f, int scope_qubits)
    : factors(std::move(f)), scope(scope_qubits) {
    validate();
}

PauliString PauliString::single(Pauli p, int qubit, int scope_qubits) {
    return PauliString({{qubit, p}}, scope_qubits);
}

void PauliString::validate() const {
    if (factors.empty()) {
        throw std::invalid_argument(
            "PauliString: the empty string is not a valid generator");
    }
    for (const auto& [qubit, factor] : factors) {
        (void)factor;
        if (qubit < 0 || qubit >= scope) {
            throw std::invalid_argument("PauliString: factor index " +
                                        std::to_string(qubit) +
                                        " outside scope of " +
                                        std::to_string(scope) + " qubits");
        }
    }
}

std::vector<int> PauliString::support() const {
    std::vector<int> qubits;
    qubits.reserve(factors.size());
    for (const auto& [qubit, factor] : factors) {
        (void)factor;
        qubits.push_back(qubit);
    }
    return qubits;  // std::map iterates in ascending key order
}

Matrix PauliString::dense_matrix() const {
    Matrix m = Matrix::Identity(1, 1);
    for (const auto& [qubit, factor] : factors) {
        (void)qubit;
        m = kron(m, single_pauli_matrix(factor));
    }
    return m;
}

PauliString PauliString::shifted(int offset, int new_scope) const {
    std::map<int, Pauli> shifted_factors;
    for (const auto& [qubit, factor] : factors) {
        shifted_factors.emplace(qubit + offset, factor);
    }
    return PauliString(std::move(shifted_factors), new_scope);
}

PauliString PauliString::with_factor(int qubit, Pauli p) const {
    if (factors.contains(qubit)) {
        throw std::invalid_argument(
            "PauliString::with_factor: qubit already carries a factor");
    }
    std::map<int, Pauli> extended = factors;
    extended.emplace(qubit, p);
    return PauliString(std::move(extended), std::max(scope, qubit + 1));
}

std::string PauliString::str() const {
    std::string out;
    for (const auto& [qubit, factor] : factors) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pauli_char(factor);
        out += std::to_string(qubit);
    }
    return out;
}

}  // namespace qugan
