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

#include <doctest.h>

#include <cmath>

#include "qugan/density_operator.hpp"
#include "qugan/gates.hpp"
#include "qugan/observable.hpp"
#include "qugan/state_vector.hpp"
#include "test_util.hpp"

using namespace qugan;

namespace {

Matrix pauli_x_matrix() {
    Matrix m(2, 2);
    m << cx(0, 0), cx(1, 0), cx(1, 0), cx(0, 0);
    return m;
}

}  // namespace

TEST_CASE("X maps |0> to |1>") {
    const StateVector out =
        apply_unitary(StateVector(1), pauli_x_matrix(), std::vector<int>{0});
    CHECK(std::abs(out.amplitude(0)) < 1e-15);
    CHECK(std::abs(out.amplitude(1) - cx(1, 0)) < 1e-15);
}

TEST_CASE("H maps |0> to the equal superposition") {
    const StateVector out =
        apply_unitary(StateVector(1), hadamard_matrix(), std::vector<int>{0});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(out.amplitude(0) - cx(r, 0)) < 1e-12);
    CHECK(std::abs(out.amplitude(1) - cx(r, 0)) < 1e-12);
}

TEST_CASE("W maps |0> to (|0> - i|1>)/sqrt(2)") {
    const StateVector out =
        apply_unitary(StateVector(1), w_gate_matrix(), std::vector<int>{0});
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(out.amplitude(0) - cx(r, 0)) < 1e-12);
    CHECK(std::abs(out.amplitude(1) - cx(0, -r)) < 1e-12);
}

TEST_CASE("apply_unitary rejects a non-unitary matrix") {
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = cx(2, 0);
    CHECK_THROWS_AS(
        apply_unitary(StateVector(1), bad, std::vector<int>{0}),
        std::logic_error);
}

TEST_CASE("apply_unitary rejects out-of-range and duplicate targets") {
    CHECK_THROWS_AS(apply_unitary(StateVector(1), pauli_x_matrix(),
                                  std::vector<int>{3}),
                    std::invalid_argument);
    std::mt19937_64 rng(1);
    const Matrix u = testutil::random_unitary(4, rng);
    CHECK_THROWS_AS(
        apply_unitary(StateVector(2), u, std::vector<int>{0, 0}),
        std::invalid_argument);
}

TEST_CASE("norm is preserved by random unitaries") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        StateVector state = testutil::random_state(4, rng);
        const Matrix u = testutil::random_unitary(4, rng);
        state.apply_matrix(u, std::vector<int>{1, 3});
        CHECK(std::abs(state.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("outer_product of basis and superposition states") {
    const DensityOperator zero = outer_product(StateVector(1));
    CHECK(std::abs(zero.matrix()(0, 0) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(zero.matrix()(1, 1)) < 1e-15);

    const DensityOperator one =
        outer_product(StateVector::basis_state(1, 1));
    CHECK(std::abs(one.matrix()(1, 1) - cx(1, 0)) < 1e-15);
    CHECK(std::abs(one.matrix()(0, 0)) < 1e-15);

    const StateVector plus = apply_unitary(
        StateVector(1), hadamard_matrix(), std::vector<int>{0});
    const DensityOperator rho = outer_product(plus);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(std::abs(rho.matrix()(i, j) - cx(0.5, 0)) < 1e-12);
        }
    }
    rho.validate();
}

TEST_CASE("partial_trace of |00><00| keeping the first qubit") {
    const DensityOperator rho = outer_product(StateVector(2));
    const DensityOperator reduced = partial_trace(rho, std::vector<int>{0});
    CHECK(reduced.num_qubits() == 1);
    CHECK(std::abs(reduced.matrix()(0, 0) - cx(1, 0)) < 1e-14);
    CHECK(std::abs(reduced.matrix()(1, 1)) < 1e-14);
}

TEST_CASE("partial_trace of a Bell state is maximally mixed") {
    StateVector bell(2);
    bell.apply_matrix(hadamard_matrix(), std::vector<int>{0});
    bell.apply_cnot(0, 1);
    const DensityOperator reduced =
        partial_trace(outer_product(bell), std::vector<int>{1});
    CHECK(std::abs(reduced.matrix()(0, 0) - cx(0.5, 0)) < 1e-12);
    CHECK(std::abs(reduced.matrix()(1, 1) - cx(0.5, 0)) < 1e-12);
    CHECK(std::abs(reduced.matrix()(0, 1)) < 1e-12);
}

TEST_CASE("partial_trace of a product state recovers each factor") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        const StateVector a = testutil::random_state(2, rng);
        const StateVector b = testutil::random_state(1, rng);
        const DensityOperator rho = outer_product(a.tensor(b));
        const DensityOperator rho_a =
            partial_trace(rho, std::vector<int>{0, 1});
        CHECK(max_abs_diff(rho_a.matrix(), outer_product(a).matrix()) <
              1e-12);
        const DensityOperator rho_b = partial_trace(rho, std::vector<int>{2});
        CHECK(max_abs_diff(rho_b.matrix(), outer_product(b).matrix()) <
              1e-12);
    }
}

TEST_CASE("partial_trace with the full keep set returns the input") {
    std::mt19937_64 rng(3);
    const DensityOperator rho = testutil::random_density(2, rng);
    const DensityOperator same = partial_trace(rho, std::vector<int>{0, 1});
    CHECK(max_abs_diff(same.matrix(), rho.matrix()) < 1e-14);
}

TEST_CASE("partial_trace rejects an empty keep set") {
    const DensityOperator rho = outer_product(StateVector(2));
    CHECK_THROWS_AS(partial_trace(rho, std::vector<int>{}),
                    std::invalid_argument);
}

TEST_CASE("partial_trace composes") {
    std::mt19937_64 rng(17);
    const DensityOperator rho = testutil::random_density(3, rng);
    const DensityOperator two_steps = partial_trace(
        partial_trace(rho, std::vector<int>{0, 2}), std::vector<int>{0});
    const DensityOperator one_step = partial_trace(rho, std::vector<int>{0});
    CHECK(max_abs_diff(two_steps.matrix(), one_step.matrix()) < 1e-12);
}

TEST_CASE("reduced_state matches partial_trace of the outer product") {
    std::mt19937_64 rng(29);
    const StateVector psi = testutil::random_state(3, rng);
    const DensityOperator direct = reduced_state(psi, std::vector<int>{1, 2});
    const DensityOperator via_outer =
        partial_trace(outer_product(psi), std::vector<int>{1, 2});
    CHECK(max_abs_diff(direct.matrix(), via_outer.matrix()) < 1e-12);
}

TEST_CASE("expectation of Z on basis and superposition states") {
    const Observable z = Observable::pauli_z(0);
    CHECK(expectation(StateVector(1), z) == doctest::Approx(1.0));
    const StateVector plus = apply_unitary(
        StateVector(1), hadamard_matrix(), std::vector<int>{0});
    CHECK(std::abs(expectation(plus, z)) < 1e-12);
    CHECK(expectation(outer_product(plus), z) ==
          doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("expectation of Z after an X rotation is cos(theta)") {
    const double theta = 0.7;
    // dense 2x2 oracle: e^{-i theta X / 2} = cos(t/2) I - i sin(t/2) X
    Matrix u = std::cos(theta / 2) * Matrix::Identity(2, 2) -
               cx(0, 1) * std::sin(theta / 2) * pauli_x_matrix();
    const StateVector rotated =
        apply_unitary(StateVector(1), u, std::vector<int>{0});
    CHECK(expectation(rotated, Observable::pauli_z(0)) ==
          doctest::Approx(std::cos(theta)).epsilon(1e-12));
    CHECK(expectation(outer_product(rotated), Observable::pauli_z(0)) ==
          doctest::Approx(std::cos(theta)).epsilon(1e-12));
}

TEST_CASE("expectation rejects a dimension mismatch") {
    const Observable z3 = Observable::pauli_z(3);
    CHECK_THROWS_AS(expectation(outer_product(StateVector(1)), z3),
                    std::invalid_argument);
}

TEST_CASE("expectation is linear in the observable") {
    std::mt19937_64 rng(31);
    const DensityOperator rho = testutil::random_density(2, rng);
    const Matrix p = testutil::random_hermitian(4, rng);
    const Matrix q = testutil::random_hermitian(4, rng);
    const double a = 0.37;
    const double b = -1.25;
    const std::vector<int> targets{0, 1};
    const double lhs =
        expectation(rho, Observable::dense(a * p + b * q, targets));
    const double rhs = a * expectation(rho, Observable::dense(p, targets)) +
                       b * expectation(rho, Observable::dense(q, targets));
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("trace and Hermiticity survive unitary conjugation") {
    std::mt19937_64 rng(37);
    const DensityOperator rho = testutil::random_density(3, rng);
    const Matrix u = testutil::random_unitary(4, rng);
    const DensityOperator evolved =
        conjugate(rho, u, std::vector<int>{0, 2});
    CHECK(std::abs(evolved.trace_real() - 1.0) < 1e-10);
    CHECK(is_hermitian(evolved.matrix(), 1e-10));
    evolved.validate();
}

TEST_CASE("purity stays within its physical range") {
    std::mt19937_64 rng(41);
    for (int q = 1; q <= 3; ++q) {
        const DensityOperator mixed = testutil::random_density(q, rng);
        CHECK(mixed.purity() >= std::pow(2.0, -q) - 1e-9);
        CHECK(mixed.purity() <= 1.0 + 1e-9);
        const DensityOperator pure =
            outer_product(testutil::random_state(q, rng));
        CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("sampling deterministic states gives deterministic counts") {
    const ShotCounts zeros = sample_z_basis(StateVector(1), 0, 100, 9);
    CHECK(zeros.zeros == 100);
    CHECK(zeros.ones == 0);
    const ShotCounts ones =
        sample_z_basis(StateVector::basis_state(1, 1), 0, 100, 9);
    CHECK(ones.zeros == 0);
    CHECK(ones.ones == 100);
}

TEST_CASE("sampling |+> concentrates near one half") {
    const StateVector plus = apply_unitary(
        StateVector(1), hadamard_matrix(), std::vector<int>{0});
    const long long shots = 1000000;
    const ShotCounts counts = sample_z_basis(plus, 0, shots, 1234);
    const double frac =
        static_cast<double>(counts.zeros) / static_cast<double>(shots);
    CHECK(std::abs(frac - 0.5) < 0.002);  // 3 sigma is ~0.0015
    CHECK(counts.zeros + counts.ones == shots);
}

TEST_CASE("sampling is deterministic per seed and rejects zero shots") {
    const StateVector plus = apply_unitary(
        StateVector(1), hadamard_matrix(), std::vector<int>{0});
    const ShotCounts a = sample_z_basis(plus, 0, 1000, 77);
    const ShotCounts b = sample_z_basis(plus, 0, 1000, 77);
    CHECK(a.zeros == b.zeros);
    CHECK_THROWS_AS(sample_z_basis(plus, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("sampling a density operator uses the diagonal marginal") {
    StateVector bell(2);
    bell.apply_matrix(hadamard_matrix(), std::vector<int>{0});
    bell.apply_cnot(0, 1);
    const DensityOperator reduced =
        partial_trace(outer_product(bell), std::vector<int>{0});
    const ShotCounts counts = sample_z_basis(reduced, 0, 100000, 5);
    const double frac =
        static_cast<double>(counts.zeros) / 100000.0;
    CHECK(std::abs(frac - 0.5) < 0.01);
}

TEST_CASE("from_amplitudes rejects wrong length and unnormalized input") {
    CHECK_THROWS_AS(StateVector::from_amplitudes(2, {cx(1, 0)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        StateVector::from_amplitudes(1, {cx(0.9, 0), cx(0.1, 0)}),
        std::invalid_argument);
}
