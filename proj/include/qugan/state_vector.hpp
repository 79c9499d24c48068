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

#include <cstdint>
#include <span>
#include <vector>

#include "qugan/linalg.hpp"
#include "qugan/pauli_string.hpp"

namespace qugan {

/**
 * @brief Dense pure state on n qubits.
 *
 * Amplitudes are indexed in the computational basis with qubit 0 as the most
 * significant bit. Gate kernels mutate the bound amplitudes in place; copies
 * of the object are independent, so concurrent simulations never share state.
 */
class StateVector {
  public:
    /// |0...0> on num_qubits.
    explicit StateVector(int num_qubits);

    static StateVector basis_state(int num_qubits, std::uint64_t basis_index);

    /// Takes ownership of the amplitudes; length and unit norm are enforced
    /// (norm tolerance 1e-10, never silently renormalized).
    static StateVector from_amplitudes(int num_qubits, std::vector<cx> amps);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    const std::vector<cx>& amplitudes() const { return amps_; }
    cx amplitude(std::uint64_t index) const { return amps_[index]; }

    double norm() const;

    /// <this|other>
    cx inner_product(const StateVector& other) const;

    /// Probability that `qubit` reads 0 in the Z basis.
    double prob_zero(int qubit) const;

    /// |this> ⊗ |other>
    StateVector tensor(const StateVector& other) const;

    // --- in-place kernels ------------------------------------------------

    /// Applies a dense 2^k matrix on the ordered target qubits (first target
    /// is the most significant sub-bit). No unitarity check; see the free
    /// function apply_unitary for the checked variant.
    void apply_matrix(const Matrix& op, std::span<const int> targets);

    void apply_pauli(const PauliString& p);

    /// Applies p on the branch where `control` reads 1.
    void apply_controlled_pauli(int control, const PauliString& p);

    /// e^{-i angle p / 2}
    void apply_pauli_rotation(const PauliString& p, double angle);

    /// CNOT: flips `target` where `control` reads 1.
    void apply_cnot(int control, int target);

  private:
    int num_qubits_;
    std::vector<cx> amps_;
};

/// Checked unitary application: validates unitarity (1e-10) and the target
/// list, returns a new state. Throws std::logic_error on a non-unitary
/// matrix and std::invalid_argument on bad targets.
StateVector apply_unitary(const StateVector& state, const Matrix& u,
                          std::span<const int> targets);

}  // namespace qugan
