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

#include <span>
#include <vector>

#include "qugan/linalg.hpp"
#include "qugan/state_vector.hpp"

namespace qugan {

/// Dense mixed state on n qubits. Formed at metric boundaries (partial
/// trace, cross-entropy); circuit evolution stays on pure states.
class DensityOperator {
  public:
    DensityOperator(int num_qubits, Matrix matrix);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return 1ull << num_qubits_; }
    const Matrix& matrix() const { return matrix_; }

    double trace_real() const;
    double purity() const;  // tr(rho^2)
    double min_eigenvalue() const;
    double prob_zero(int qubit) const;

    /// Checks Hermiticity (1e-10), unit trace (1e-10) and positive
    /// semidefiniteness up to -1e-9; throws std::logic_error on violation.
    void validate() const;

  private:
    int num_qubits_;
    Matrix matrix_;
};

/// |psi><psi|
DensityOperator outer_product(const StateVector& state);

/// Traces out every qubit not in `keep`; `keep` must be nonempty.
DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const int> keep);

/// Reduced state of a pure state without forming the full density matrix.
DensityOperator reduced_state(const StateVector& state,
                              std::span<const int> keep);

/// U rho U^dagger with U acting on `targets`.
DensityOperator conjugate(const DensityOperator& rho, const Matrix& u,
                          std::span<const int> targets);

}  // namespace qugan
