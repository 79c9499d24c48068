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

#include "qugan/observable.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qugan {

Observable Observable::pauli_z(int qubit) {
    return pauli(PauliString::single(Pauli::Z, qubit, qubit + 1));
}

Observable Observable::pauli(const PauliString& p) {
    p.validate();
    Observable obs;
    obs.targets_ = p.support();
    obs.matrix_ = p.dense_matrix();
    obs.pauli_ = p;
    return obs;
}

Observable Observable::dense(Matrix m, std::vector<int> targets) {
    if (!is_hermitian(m, 1e-12)) {
        throw std::invalid_argument("Observable: matrix is not Hermitian");
    }
    if (m.rows() != static_cast<Eigen::Index>(1ull << targets.size())) {
        throw std::invalid_argument("Observable: dimension mismatch");
    }
    Observable obs;
    obs.targets_ = std::move(targets);
    obs.matrix_ = std::move(m);
    return obs;
}

double expectation(const DensityOperator& rho, const Observable& obs) {
    const int nq = rho.num_qubits();
    const int k = static_cast<int>(obs.targets().size());
    const std::uint64_t sub_dim = 1ull << k;

    std::uint64_t target_mask = 0;
    std::vector<int> shifts(k);
    for (int t = 0; t < k; ++t) {
        const int q = obs.targets()[t];
        if (q < 0 || q >= nq) {
            throw std::invalid_argument(
                "expectation: observable target out of range");
        }
        shifts[t] = qubit_shift(nq, q);
        target_mask |= 1ull << shifts[t];
    }
    std::vector<std::uint64_t> offsets(sub_dim, 0);
    for (std::uint64_t s = 0; s < sub_dim; ++s) {
        for (int t = 0; t < k; ++t) {
            if ((s >> (k - 1 - t)) & 1u) {
                offsets[s] |= 1ull << shifts[t];
            }
        }
    }

    // tr(rho Q) with Q = P embedded: sum over environment blocks.
    cx acc(0, 0);
    for (std::uint64_t base = 0; base < rho.dim(); ++base) {
        if (base & target_mask) {
            continue;
        }
        for (std::uint64_t a = 0; a < sub_dim; ++a) {
            for (std::uint64_t b = 0; b < sub_dim; ++b) {
                acc += rho.matrix()(base + offsets[a], base + offsets[b]) *
                       obs.matrix()(b, a);
            }
        }
    }
    return acc.real();
}

double expectation(const StateVector& state, const Observable& obs) {
    StateVector applied = state;
    if (obs.pauli_string()) {
        PauliString p = *obs.pauli_string();
        p.scope = state.num_qubits();
        p.validate();
        applied.apply_pauli(p);
    } else {
        applied.apply_matrix(obs.matrix(), obs.targets());
    }
    return state.inner_product(applied).real();
}

namespace {

ShotCounts sample_from_probability(double p0, long long shots,
                                   std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("sample_z_basis: shots must be >= 1");
    }
    p0 = std::min(1.0, std::max(0.0, p0));
    std::mt19937_64 rng(seed);
    std::binomial_distribution<long long> dist(shots, p0);
    ShotCounts counts;
    counts.zeros = dist(rng);
    counts.ones = shots - counts.zeros;
    return counts;
}

}  // namespace

ShotCounts sample_z_basis(const StateVector& state, int qubit,
                          long long shots, std::uint64_t seed) {
    return sample_from_probability(state.prob_zero(qubit), shots, seed);
}

ShotCounts sample_z_basis(const DensityOperator& rho, int qubit,
                          long long shots, std::uint64_t seed) {
    return sample_from_probability(rho.prob_zero(qubit), shots, seed);
}

}  // namespace qugan
