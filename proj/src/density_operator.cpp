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

#include "qugan/density_operator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qugan {

namespace {

// Splits a full-register index into (kept bits, traced bits) given the
// shift positions of the kept qubits.
struct IndexSplitter {
    int num_qubits;
    std::vector<int> keep_shifts;   // full-register shifts, MSB-first subindex
    std::vector<int> env_shifts;

    IndexSplitter(int nq, std::span<const int> keep) : num_qubits(nq) {
        std::vector<bool> kept(nq, false);
        std::vector<int> keep_sorted(keep.begin(), keep.end());
        std::sort(keep_sorted.begin(), keep_sorted.end());
        for (int q : keep_sorted) {
            if (q < 0 || q >= nq) {
                throw std::invalid_argument(
                    "partial_trace: keep qubit out of range");
            }
            if (kept[q]) {
                throw std::invalid_argument(
                    "partial_trace: duplicate keep qubit");
            }
            kept[q] = true;
            keep_shifts.push_back(qubit_shift(nq, q));
        }
        if (keep_shifts.empty()) {
            throw std::invalid_argument("partial_trace: empty keep set");
        }
        for (int q = 0; q < nq; ++q) {
            if (!kept[q]) {
                env_shifts.push_back(qubit_shift(nq, q));
            }
        }
    }

    std::uint64_t compose(std::uint64_t kept_index,
                          std::uint64_t env_index) const {
        std::uint64_t out = 0;
        const int nk = static_cast<int>(keep_shifts.size());
        for (int t = 0; t < nk; ++t) {
            if ((kept_index >> (nk - 1 - t)) & 1u) {
                out |= 1ull << keep_shifts[t];
            }
        }
        const int ne = static_cast<int>(env_shifts.size());
        for (int t = 0; t < ne; ++t) {
            if ((env_index >> (ne - 1 - t)) & 1u) {
                out |= 1ull << env_shifts[t];
            }
        }
        return out;
    }
};

}  // namespace

DensityOperator::DensityOperator(int num_qubits, Matrix matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
    const auto d = static_cast<Eigen::Index>(1ull << num_qubits);
    if (matrix_.rows() != d || matrix_.cols() != d) {
        throw std::invalid_argument(
            "DensityOperator: matrix must be 2^n x 2^n");
    }
}

double DensityOperator::trace_real() const {
    return matrix_.trace().real();
}

double DensityOperator::purity() const {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
    double acc = 0;
    for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
        for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
            acc += std::norm(matrix_(i, j));
        }
    }
    return acc;
}

double DensityOperator::min_eigenvalue() const {
    return hermitian_eigensystem(matrix_).values.minCoeff();
}

double DensityOperator::prob_zero(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::invalid_argument("prob_zero: qubit out of range");
    }
    const std::uint64_t bit = 1ull << qubit_shift(num_qubits_, qubit);
    double p = 0;
    for (std::uint64_t i = 0; i < dim(); ++i) {
        if (!(i & bit)) {
            p += matrix_(i, i).real();
        }
    }
    return p;
}

void DensityOperator::validate() const {
    if (!is_hermitian(matrix_, 1e-10)) {
        throw std::logic_error("DensityOperator: not Hermitian");
    }
    if (std::abs(trace_real() - 1.0) > 1e-10) {
        throw std::logic_error("DensityOperator: trace differs from 1");
    }
    if (min_eigenvalue() < -1e-9) {
        throw std::logic_error("DensityOperator: negative eigenvalue");
    }
}

DensityOperator outer_product(const StateVector& state) {
    const auto& amps = state.amplitudes();
    const auto d = static_cast<Eigen::Index>(state.dim());
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            m(i, j) = amps[i] * std::conj(amps[j]);
        }
    }
    return DensityOperator(state.num_qubits(), std::move(m));
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const int> keep) {
    const IndexSplitter split(rho.num_qubits(), keep);
    const int nk = static_cast<int>(split.keep_shifts.size());
    const int ne = static_cast<int>(split.env_shifts.size());
    const std::uint64_t kept_dim = 1ull << nk;
    const std::uint64_t env_dim = 1ull << ne;

    Matrix out = Matrix::Zero(kept_dim, kept_dim);
    for (std::uint64_t a = 0; a < kept_dim; ++a) {
        for (std::uint64_t b = 0; b < kept_dim; ++b) {
            cx acc(0, 0);
            for (std::uint64_t e = 0; e < env_dim; ++e) {
                acc += rho.matrix()(split.compose(a, e), split.compose(b, e));
            }
            out(a, b) = acc;
        }
    }
    return DensityOperator(nk, std::move(out));
}

DensityOperator reduced_state(const StateVector& state,
                              std::span<const int> keep) {
    const IndexSplitter split(state.num_qubits(), keep);
    const int nk = static_cast<int>(split.keep_shifts.size());
    const int ne = static_cast<int>(split.env_shifts.size());
    const std::uint64_t kept_dim = 1ull << nk;
    const std::uint64_t env_dim = 1ull << ne;
    const auto& amps = state.amplitudes();

    Matrix out = Matrix::Zero(kept_dim, kept_dim);
    for (std::uint64_t a = 0; a < kept_dim; ++a) {
        for (std::uint64_t b = 0; b < kept_dim; ++b) {
            cx acc(0, 0);
            for (std::uint64_t e = 0; e < env_dim; ++e) {
                acc += amps[split.compose(a, e)] *
                       std::conj(amps[split.compose(b, e)]);
            }
            out(a, b) = acc;
        }
    }
    return DensityOperator(nk, std::move(out));
}

DensityOperator conjugate(const DensityOperator& rho, const Matrix& u,
                          std::span<const int> targets) {
    const Matrix full = embed_operator(u, targets, rho.num_qubits());
    return DensityOperator(rho.num_qubits(),
                           full * rho.matrix() * full.adjoint());
}

}  // namespace qugan
