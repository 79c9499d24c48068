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

#include "qugan/linalg.hpp"

#include <stdexcept>

namespace qugan {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

Matrix embed_operator(const Matrix& op, std::span<const int> targets,
                      int num_qubits) {
    const int k = static_cast<int>(targets.size());
    const std::uint64_t sub_dim = 1ull << k;
    const std::uint64_t dim = 1ull << num_qubits;
    if (op.rows() != static_cast<Eigen::Index>(sub_dim) ||
        op.cols() != static_cast<Eigen::Index>(sub_dim)) {
        throw std::invalid_argument("embed_operator: dimension mismatch");
    }
    std::uint64_t target_mask = 0;
    std::vector<int> shifts(k);
    for (int t = 0; t < k; ++t) {
        if (targets[t] < 0 || targets[t] >= num_qubits) {
            throw std::invalid_argument("embed_operator: qubit out of range");
        }
        shifts[t] = qubit_shift(num_qubits, targets[t]);
        target_mask |= 1ull << shifts[t];
    }

    // offset(s) scatters the sub-index bits onto the target positions
    std::vector<std::uint64_t> offsets(sub_dim, 0);
    for (std::uint64_t s = 0; s < sub_dim; ++s) {
        for (int t = 0; t < k; ++t) {
            if ((s >> (k - 1 - t)) & 1u) {
                offsets[s] |= 1ull << shifts[t];
            }
        }
    }

    Matrix out = Matrix::Zero(dim, dim);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & target_mask) {
            continue;
        }
        for (std::uint64_t r = 0; r < sub_dim; ++r) {
            for (std::uint64_t c = 0; c < sub_dim; ++c) {
                out(base + offsets[r], base + offsets[c]) = op(r, c);
            }
        }
    }
    return out;
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    Matrix prod = m * m.adjoint();
    return max_abs_diff(prod, Matrix::Identity(m.rows(), m.cols())) <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) {
        return false;
    }
    return max_abs_diff(m, m.adjoint()) <= tol;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

EigenSystem hermitian_eigensystem(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigensystem: solver failed");
    }
    return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace qugan
