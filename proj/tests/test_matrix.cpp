// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <cmath>

#include "doctest.h"
#include "qclone/matrix.hpp"
#include "qclone/states.hpp"
#include "test_util.hpp"

using namespace qclone;
using namespace qclone::testing;

TEST_CASE("tensor matches index enumeration on rectangular factors") {
    Rng rng = make_rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix a = random_matrix(rng, 2, 3);
        const ComplexMatrix b = random_matrix(rng, 3, 2);
        const ComplexMatrix t = tensor(a, b);
        CHECK(t.rows() == 6);
        CHECK(t.cols() == 6);
        CHECK(t.max_abs_diff(naive_kron(a, b)) == 0.0);
    }
}

TEST_CASE("tensor of states and operators") {
    const PureState psi = tensor(PureState::basis(2, 1), PureState::basis(2, 0));
    CHECK(psi.dim() == 4);
    CHECK(psi[2] == Complex{1.0, 0.0});
    CHECK(tensor(pauli(3), pauli(3)).approx_equal(ComplexMatrix::diagonal({1.0, -1.0, -1.0, 1.0})));
}

TEST_CASE("Pauli algebra") {
    const Complex I{0.0, 1.0};
    CHECK((pauli(1) * pauli(2)).approx_equal(I * pauli(3)));
    for (int k = 0; k < 4; ++k) {
        CHECK((pauli(k) * pauli(k)).approx_equal(ComplexMatrix::identity(2)));
        CHECK(pauli(k).is_hermitian());
    }
    CHECK_THROWS_AS(pauli(4), std::out_of_range);
}

TEST_CASE("partial trace matches brute-force summation") {
    Rng rng = make_rng(2);
    const std::array<std::size_t, 3> dims = {2, 3, 2};
    const std::array<std::size_t, 2> keep = {0, 2};
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = random_density_matrix(rng, 12);
        const ComplexMatrix reduced = partial_trace(m, dims, keep);
        CHECK(reduced.max_abs_diff(naive_trace_middle(m, 2, 3, 2)) < 1e-14);
    }
}

TEST_CASE("partial trace of a product returns the factor") {
    Rng rng = make_rng(3);
    const std::array<std::size_t, 2> dims = {2, 2};
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = random_density_matrix(rng, 2);
        const ComplexMatrix b = random_density_matrix(rng, 2);
        const DensityOperator ab(tensor(a, b));
        const std::array<std::size_t, 1> k0 = {0}, k1 = {1};
        CHECK(partial_trace(ab, dims, k0).matrix().max_abs_diff(a) < 1e-14);
        CHECK(partial_trace(ab, dims, k1).matrix().max_abs_diff(b) < 1e-14);
    }
}

TEST_CASE("partial trace rejects malformed keep lists") {
    const ComplexMatrix m = ComplexMatrix::identity(4);
    const std::array<std::size_t, 2> dims = {2, 2};
    const std::array<std::size_t, 2> unsorted = {1, 0};
    const std::array<std::size_t, 1> out_of_range = {2};
    const std::array<std::size_t, 2> bad_dims = {2, 3};
    const std::array<std::size_t, 1> k0 = {0};
    CHECK_THROWS_AS(partial_trace(m, dims, unsorted), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(m, dims, out_of_range), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(m, bad_dims, k0), std::invalid_argument);
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices") {
    Rng rng = make_rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        const ComplexMatrix g = random_matrix(rng, 4, 4);
        const ComplexMatrix h = (g + g.adjoint()) * Complex{0.5, 0.0};
        const HermitianEigen e = eig_hermitian(h);
        REQUIRE(e.values.size() == 4);
        for (std::size_t k = 1; k < 4; ++k) CHECK(e.values[k - 1] >= e.values[k]);
        const ComplexMatrix v = e.vectors;
        CHECK((v.adjoint() * v).approx_equal(ComplexMatrix::identity(4), 1e-12));
        const ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(e.values) * v.adjoint();
        CHECK(rebuilt.max_abs_diff(h) < 1e-12);
    }
}

TEST_CASE("eig_hermitian agrees with the characteristic polynomial") {
    // Werner state at x = 0: eigenvalues 1/2 (singlet) and 1/6 (triplet).
    const DensityOperator rho = werner_to_density(WernerState(0.0));
    const HermitianEigen e = eig_hermitian(rho.matrix());
    CHECK(e.values[0] == doctest::Approx(0.5).epsilon(1e-14));
    for (int k = 1; k < 4; ++k) CHECK(e.values[k] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

    const std::vector<double> roots = characteristic_roots(rho.matrix(), -0.1, 1.1);
    REQUIRE(!roots.empty());
    std::vector<double> distinct;
    for (double r : roots) {
        if (distinct.empty() || std::abs(r - distinct.back()) > 1e-3) distinct.push_back(r);
    }
    REQUIRE(distinct.size() == 2);
    CHECK(distinct[0] == doctest::Approx(1.0 / 6.0).epsilon(1e-4));
    CHECK(distinct[1] == doctest::Approx(0.5).epsilon(1e-9));

    Rng rng = make_rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix m = random_density_matrix(rng, 4);
        const std::vector<double> r = characteristic_roots(m, -0.01, 1.01);
        REQUIRE(r.size() == 4);
        const HermitianEigen ev = eig_hermitian(m);
        for (int k = 0; k < 4; ++k) CHECK(ev.values[k] == doctest::Approx(r[3 - k]).epsilon(1e-9));
    }
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("sqrt_psd squares back") {
    Rng rng = make_rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix m = random_density_matrix(rng, 4);
        const ComplexMatrix r = sqrt_psd(m);
        CHECK((r * r).max_abs_diff(m) < 1e-13);
        CHECK(r.is_hermitian());
    }
}

TEST_CASE("DensityOperator validation") {
    CHECK_NOTHROW(DensityOperator(ComplexMatrix::diagonal({0.25, 0.25, 0.25, 0.25})));
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix{{0.5, 0.1}, {0.0, 0.5}}), UnphysicalStateError);
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::diagonal({0.5, 0.4})), UnphysicalStateError);
    CHECK_THROWS_AS(DensityOperator(ComplexMatrix::diagonal({1.1, -0.1})), UnphysicalStateError);
    CHECK_NOTHROW(DensityOperator(ComplexMatrix::diagonal({1.0 + 1e-12, -1e-12})));
    CHECK_THROWS_AS(PureState({Complex{1.0, 0.0}, Complex{0.1, 0.0}}), std::invalid_argument);
}

TEST_CASE("entropy") {
    const std::array<double, 4> uniform4 = {0.25, 0.25, 0.25, 0.25};
    CHECK(entropy_bits(uniform4) == doctest::Approx(2.0).epsilon(1e-15));
    const std::array<double, 2> tiny_negative = {1.0 + 1e-12, -1e-12};
    CHECK(entropy_bits(tiny_negative) == doctest::Approx(0.0));
    const std::array<double, 2> negative = {1.1, -0.1};
    CHECK_THROWS_AS(entropy_bits(negative), UnphysicalStateError);

    CHECK(von_neumann_entropy(DensityOperator::maximally_mixed(4)) == doctest::Approx(2.0).epsilon(1e-14));
    Rng rng = make_rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        CHECK(std::abs(von_neumann_entropy(DensityOperator(random_pure(rng, 4)))) < 1e-10);
        const ComplexMatrix rho = random_density_matrix(rng, 4);
        const ComplexMatrix u = random_unitary(rng, 4);
        ComplexMatrix rotated = u * rho * u.adjoint();
        rotated = (rotated + rotated.adjoint()) * Complex{0.5, 0.0};
        CHECK(von_neumann_entropy(DensityOperator(rotated)) ==
              doctest::Approx(von_neumann_entropy(DensityOperator(rho))).epsilon(1e-12));
    }
}

TEST_CASE("fidelity_pure") {
    const PureState zero = PureState::basis(2, 0);
    CHECK(fidelity_pure(zero, DensityOperator(zero)) == doctest::Approx(1.0));
    CHECK(fidelity_pure(zero, DensityOperator::maximally_mixed(2)) == doctest::Approx(0.5));
    CHECK(fidelity_pure(zero, DensityOperator(PureState::basis(2, 1))) == doctest::Approx(0.0));
}
