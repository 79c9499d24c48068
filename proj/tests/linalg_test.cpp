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

#include "qugan/linalg.hpp"
#include "test_util.hpp"

using namespace qugan;

TEST_CASE("kron matches hand-computed 2x2 example") {
    Matrix a(2, 2);
    a << cx(1, 0), cx(2, 0), cx(3, 0), cx(4, 0);
    Matrix b = Matrix::Identity(2, 2);
    const Matrix k = kron(a, b);
    CHECK(k.rows() == 4);
    CHECK(k(0, 0) == cx(1, 0));
    CHECK(k(0, 2) == cx(2, 0));
    CHECK(k(2, 1) == cx(0, 0));
    CHECK(k(3, 3) == cx(4, 0));
}

TEST_CASE("embed_operator places a 1-qubit operator with qubit 0 as MSB") {
    Matrix z(2, 2);
    z << cx(1, 0), cx(0, 0), cx(0, 0), cx(-1, 0);

    const std::vector<int> on_first{0};
    const Matrix z0 = embed_operator(z, on_first, 2);
    // Z on qubit 0 = diag(1, 1, -1, -1)
    CHECK(z0(0, 0) == cx(1, 0));
    CHECK(z0(1, 1) == cx(1, 0));
    CHECK(z0(2, 2) == cx(-1, 0));
    CHECK(z0(3, 3) == cx(-1, 0));

    const std::vector<int> on_second{1};
    const Matrix z1 = embed_operator(z, on_second, 2);
    CHECK(z1(1, 1) == cx(-1, 0));
    CHECK(z1(2, 2) == cx(1, 0));
}

TEST_CASE("embed_operator on all qubits is the operator itself") {
    std::mt19937_64 rng(11);
    const Matrix u = testutil::random_unitary(4, rng);
    const std::vector<int> all{0, 1};
    CHECK(max_abs_diff(embed_operator(u, all, 2), u) < 1e-14);
}

TEST_CASE("hermitian_eigensystem reconstructs the input") {
    std::mt19937_64 rng(42);
    const Matrix h = testutil::random_hermitian(8, rng);
    const EigenSystem es = hermitian_eigensystem(h);
    Matrix recon = es.vectors * es.values.cast<cx>().asDiagonal() *
                   es.vectors.adjoint();
    CHECK(max_abs_diff(recon, h) < 1e-10);
    CHECK(is_unitary(es.vectors, 1e-10));
    for (int i = 1; i < es.values.size(); ++i) {
        CHECK(es.values(i - 1) <= es.values(i));
    }
}

TEST_CASE("is_unitary and is_hermitian classify correctly") {
    std::mt19937_64 rng(7);
    CHECK(is_unitary(testutil::random_unitary(8, rng), 1e-10));
    CHECK(is_hermitian(testutil::random_hermitian(8, rng), 1e-12));
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = cx(0.5, 0);
    CHECK(!is_unitary(bad, 1e-10));
    CHECK(!is_hermitian(bad, 1e-12));
}
