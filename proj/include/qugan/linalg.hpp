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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qugan {

using cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Kronecker product a ⊗ b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Embeds an operator acting on `targets` into the full 2^num_qubits space,
/// identity on every other qubit. Qubit 0 is the most significant bit of the
/// basis index; the operator's sub-index orders its bits by the position in
/// `targets` (first target = most significant sub-bit).
Matrix embed_operator(const Matrix& op, std::span<const int> targets,
                      int num_qubits);

bool is_unitary(const Matrix& m, double tol);
bool is_hermitian(const Matrix& m, double tol);

double max_abs_diff(const Matrix& a, const Matrix& b);

struct EigenSystem {
    Eigen::VectorXd values;  // ascending
    Matrix vectors;          // columns are orthonormal eigenvectors
};

/// Eigendecomposition of a Hermitian matrix.
EigenSystem hermitian_eigensystem(const Matrix& m);

// Bit conventions shared by all modules: qubit 0 is the most significant bit
// of a computational-basis index.
inline int qubit_shift(int num_qubits, int qubit) {
    return num_qubits - 1 - qubit;
}

inline int qubit_bit(std::uint64_t index, int num_qubits, int qubit) {
    return static_cast<int>((index >> qubit_shift(num_qubits, qubit)) & 1u);
}

}  // namespace qugan
