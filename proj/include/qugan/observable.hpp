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
#include <optional>
#include <span>
#include <vector>

#include "qugan/density_operator.hpp"
#include "qugan/linalg.hpp"
#include "qugan/pauli_string.hpp"
#include "qugan/state_vector.hpp"

namespace qugan {

/**
 * @brief Hermitian operator on a qubit subset.
 *
 * Either a dense matrix on ordered targets or a Pauli string. The Pauli
 * structure is preserved when present so that circuit constructions needing
 * controlled observables can reuse it.
 */
class Observable {
  public:
    static Observable pauli_z(int qubit);
    static Observable pauli(const PauliString& p);

    /// Dense Hermitian matrix (tolerance 1e-12) on the ordered targets.
    static Observable dense(Matrix m, std::vector<int> targets);

    const std::vector<int>& targets() const { return targets_; }
    const Matrix& matrix() const { return matrix_; }
    const std::optional<PauliString>& pauli_string() const { return pauli_; }

  private:
    Observable() = default;
    std::vector<int> targets_;
    Matrix matrix_;
    std::optional<PauliString> pauli_;
};

/// tr(rho P); the imaginary residue (bounded by 1e-10 for valid inputs) is
/// discarded.
double expectation(const DensityOperator& rho, const Observable& obs);
double expectation(const StateVector& state, const Observable& obs);

struct ShotCounts {
    long long zeros = 0;
    long long ones = 0;
};

/// Z-basis sampling of one qubit, binomial in the Born-rule marginal;
/// deterministic for a given seed.
ShotCounts sample_z_basis(const StateVector& state, int qubit,
                          long long shots, std::uint64_t seed);
ShotCounts sample_z_basis(const DensityOperator& rho, int qubit,
                          long long shots, std::uint64_t seed);

}  // namespace qugan
