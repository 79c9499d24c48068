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

#include "qugan/state_vector.hpp"

#include <cmath>
#include <stdexcept>

namespace qugan {

namespace {

constexpr double kNormTol = 1e-10;

// Flip mask plus per-factor phase data for a Pauli string.
struct PauliKernel {
    std::uint64_t flip_mask = 0;  // X and Y factors flip their bit
    // (bit position, is_y, is_z) for phase-carrying factors
    std::vector<std::uint64_t> y_bits;
    std::vector<std::uint64_t> z_bits;

    PauliKernel(const PauliString& p, int num_qubits) {
        p.validate();
        if (p.scope > num_qubits) {
            throw std::invalid_argument(
                "PauliString scope exceeds register size");
        }
        for (const auto& [qubit, factor] : p.factors) {
            const std::uint64_t bit = 1ull
                                      << qubit_shift(num_qubits, qubit);
            switch (factor) {
            case Pauli::X:
                flip_mask |= bit;
                break;
            case Pauli::Y:
                flip_mask |= bit;
                y_bits.push_back(bit);
                break;
            case Pauli::Z:
                z_bits.push_back(bit);
                break;
            }
        }
    }

    // Coefficient c(i) in (P psi)[i ^ flip_mask] = c(i) psi[i].
    cx coeff(std::uint64_t index) const {
        cx c(1, 0);
        for (std::uint64_t bit : y_bits) {
            c *= (index & bit) ? cx(0, -1) : cx(0, 1);
        }
        for (std::uint64_t bit : z_bits) {
            if (index & bit) {
                c = -c;
            }
        }
        return c;
    }
};

std::uint64_t highest_bit(std::uint64_t mask) {
    std::uint64_t bit = 1;
    while (bit <= mask / 2) {
        bit <<= 1;
    }
    return bit;
}

}  // namespace

StateVector::StateVector(int num_qubits)
    : num_qubits_(num_qubits), amps_(1ull << num_qubits, cx(0, 0)) {
    if (num_qubits < 0) {
        throw std::invalid_argument("StateVector: negative qubit count");
    }
    amps_[0] = cx(1, 0);
}

StateVector StateVector::basis_state(int num_qubits,
                                     std::uint64_t basis_index) {
    StateVector s(num_qubits);
    if (basis_index >= s.dim()) {
        throw std::invalid_argument("StateVector: basis index out of range");
    }
    s.amps_[0] = cx(0, 0);
    s.amps_[basis_index] = cx(1, 0);
    return s;
}

StateVector StateVector::from_amplitudes(int num_qubits,
                                         std::vector<cx> amps) {
    if (amps.size() != (1ull << num_qubits)) {
        throw std::invalid_argument(
            "StateVector: amplitude count must be 2^num_qubits");
    }
    StateVector s(num_qubits);
    s.amps_ = std::move(amps);
    if (std::abs(s.norm() - 1.0) > kNormTol) {
        throw std::invalid_argument("StateVector: amplitudes not normalized");
    }
    return s;
}

double StateVector::norm() const {
    double sum = 0;
    for (const cx& a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

cx StateVector::inner_product(const StateVector& other) const {
    if (num_qubits_ != other.num_qubits_) {
        throw std::invalid_argument("inner_product: qubit count mismatch");
    }
    cx acc(0, 0);
    for (std::uint64_t i = 0; i < dim(); ++i) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

double StateVector::prob_zero(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw std::invalid_argument("prob_zero: qubit out of range");
    }
    const std::uint64_t bit = 1ull << qubit_shift(num_qubits_, qubit);
    double p = 0;
    for (std::uint64_t i = 0; i < dim(); ++i) {
        if (!(i & bit)) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

StateVector StateVector::tensor(const StateVector& other) const {
    StateVector out(num_qubits_ + other.num_qubits_);
    const std::uint64_t other_dim = other.dim();
    for (std::uint64_t i = 0; i < dim(); ++i) {
        for (std::uint64_t j = 0; j < other_dim; ++j) {
            out.amps_[i * other_dim + j] = amps_[i] * other.amps_[j];
        }
    }
    return out;
}

void StateVector::apply_matrix(const Matrix& op,
                               std::span<const int> targets) {
    const int k = static_cast<int>(targets.size());
    const std::uint64_t sub_dim = 1ull << k;
    if (op.rows() != static_cast<Eigen::Index>(sub_dim) ||
        op.cols() != static_cast<Eigen::Index>(sub_dim)) {
        throw std::invalid_argument("apply_matrix: dimension mismatch");
    }
    std::uint64_t target_mask = 0;
    std::vector<int> shifts(k);
    for (int t = 0; t < k; ++t) {
        if (targets[t] < 0 || targets[t] >= num_qubits_) {
            throw std::invalid_argument("apply_matrix: qubit out of range");
        }
        const std::uint64_t bit = 1ull << qubit_shift(num_qubits_, targets[t]);
        if (target_mask & bit) {
            throw std::invalid_argument("apply_matrix: duplicate target");
        }
        shifts[t] = qubit_shift(num_qubits_, targets[t]);
        target_mask |= bit;
    }

    std::vector<std::uint64_t> offsets(sub_dim, 0);
    for (std::uint64_t s = 0; s < sub_dim; ++s) {
        for (int t = 0; t < k; ++t) {
            if ((s >> (k - 1 - t)) & 1u) {
                offsets[s] |= 1ull << shifts[t];
            }
        }
    }

    std::vector<cx> scratch(sub_dim);
    for (std::uint64_t base = 0; base < dim(); ++base) {
        if (base & target_mask) {
            continue;
        }
        for (std::uint64_t s = 0; s < sub_dim; ++s) {
            scratch[s] = amps_[base + offsets[s]];
        }
        for (std::uint64_t r = 0; r < sub_dim; ++r) {
            cx acc(0, 0);
            for (std::uint64_t c = 0; c < sub_dim; ++c) {
                acc += op(r, c) * scratch[c];
            }
            amps_[base + offsets[r]] = acc;
        }
    }
}

void StateVector::apply_pauli(const PauliString& p) {
    const PauliKernel kernel(p, num_qubits_);
    if (kernel.flip_mask == 0) {
        for (std::uint64_t i = 0; i < dim(); ++i) {
            amps_[i] *= kernel.coeff(i);
        }
        return;
    }
    const std::uint64_t hb = highest_bit(kernel.flip_mask);
    for (std::uint64_t i = 0; i < dim(); ++i) {
        if (i & hb) {
            continue;  // partner index handles the pair
        }
        const std::uint64_t j = i ^ kernel.flip_mask;
        const cx ai = amps_[i];
        const cx aj = amps_[j];
        amps_[j] = kernel.coeff(i) * ai;
        amps_[i] = kernel.coeff(j) * aj;
    }
}

void StateVector::apply_controlled_pauli(int control, const PauliString& p) {
    if (control < 0 || control >= num_qubits_) {
        throw std::invalid_argument(
            "apply_controlled_pauli: control out of range");
    }
    if (p.factors.contains(control)) {
        throw std::invalid_argument(
            "apply_controlled_pauli: control collides with a target");
    }
    const PauliKernel kernel(p, num_qubits_);
    const std::uint64_t cbit = 1ull << qubit_shift(num_qubits_, control);
    if (kernel.flip_mask == 0) {
        for (std::uint64_t i = 0; i < dim(); ++i) {
            if (i & cbit) {
                amps_[i] *= kernel.coeff(i);
            }
        }
        return;
    }
    const std::uint64_t hb = highest_bit(kernel.flip_mask);
    for (std::uint64_t i = 0; i < dim(); ++i) {
        if (!(i & cbit) || (i & hb)) {
            continue;
        }
        const std::uint64_t j = i ^ kernel.flip_mask;
        const cx ai = amps_[i];
        const cx aj = amps_[j];
        amps_[j] = kernel.coeff(i) * ai;
        amps_[i] = kernel.coeff(j) * aj;
    }
}

void StateVector::apply_pauli_rotation(const PauliString& p, double angle) {
    const PauliKernel kernel(p, num_qubits_);
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const cx minus_i_sin(0, -s);
    if (kernel.flip_mask == 0) {
        // Diagonal string: pure phases e^{-i angle/2 * (+-1)}.
        for (std::uint64_t i = 0; i < dim(); ++i) {
            amps_[i] *= c + minus_i_sin * kernel.coeff(i);
        }
        return;
    }
    const std::uint64_t hb = highest_bit(kernel.flip_mask);
    for (std::uint64_t i = 0; i < dim(); ++i) {
        if (i & hb) {
            continue;
        }
        const std::uint64_t j = i ^ kernel.flip_mask;
        const cx ai = amps_[i];
        const cx aj = amps_[j];
        amps_[i] = c * ai + minus_i_sin * kernel.coeff(j) * aj;
        amps_[j] = c * aj + minus_i_sin * kernel.coeff(i) * ai;
    }
}

void StateVector::apply_cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("apply_cnot: control equals target");
    }
    apply_controlled_pauli(control,
                           PauliString::single(Pauli::X, target, num_qubits_));
}

StateVector apply_unitary(const StateVector& state, const Matrix& u,
                          std::span<const int> targets) {
    if (!is_unitary(u, 1e-10)) {
        throw std::logic_error("apply_unitary: matrix is not unitary");
    }
    StateVector out = state;
    out.apply_matrix(u, targets);
    return out;
}

}  // namespace qugan
