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

#include "qugan/density_operator.hpp"
#include "qugan/linalg.hpp"
#include "qugan/state_vector.hpp"

namespace qugan::testutil {

inline Matrix random_complex_matrix(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            m(i, j) = cx(gauss(rng), gauss(rng));
        }
    }
    return m;
}

/// Haar-ish random unitary from the QR decomposition of a Gaussian matrix.
inline Matrix random_unitary(int dim, std::mt19937_64& rng) {
    const Matrix m = random_complex_matrix(dim, rng);
    Eigen::HouseholderQR<Matrix> qr(m);
    Matrix q = qr.householderQ();
    // fix the phase so the diagonal of R is positive
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const cx d = r(i, i);
        if (std::abs(d) > 1e-12) {
            q.col(i) *= d / std::abs(d);
        }
    }
    return q;
}

inline Matrix random_hermitian(int dim, std::mt19937_64& rng) {
    const Matrix m = random_complex_matrix(dim, rng);
    return (m + m.adjoint()) / 2;
}

inline StateVector random_state(int num_qubits, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cx> amps(1ull << num_qubits);
    double norm = 0;
    for (cx& a : amps) {
        a = cx(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (cx& a : amps) {
        a /= norm;
    }
    return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

/// Random full-rank mixed state (convex mixture of random pure states).
inline DensityOperator random_density(int num_qubits, std::mt19937_64& rng,
                                      int mixture = 3) {
    const std::uint64_t dim = 1ull << num_qubits;
    Matrix m = Matrix::Zero(dim, dim);
    std::uniform_real_distribution<double> unif(0.1, 1.0);
    double total = 0;
    std::vector<double> weights(mixture);
    for (double& w : weights) {
        w = unif(rng);
        total += w;
    }
    for (int k = 0; k < mixture; ++k) {
        m += (weights[k] / total) *
             outer_product(random_state(num_qubits, rng)).matrix();
    }
    return DensityOperator(num_qubits, std::move(m));
}

}  // namespace qugan::testutil
