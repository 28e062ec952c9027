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
#include "qclone/cloners.hpp"
#include "test_util.hpp"

using namespace qclone;
using namespace qclone::testing;

namespace {

const double kU2 = (4.0 + std::sqrt(79.0)) / 21.0;
const double kV2 = (17.0 - std::sqrt(79.0)) / 42.0;

/// Clone pair of an arbitrary two-qubit input by dilation: (V⊗V) rho
/// (V⊗V)^dagger on six qubits, then trace all but the first clone of each
/// side.
ComplexMatrix dilation_reference(const MachineCoefficients &m, const ComplexMatrix &rho) {
    const ComplexMatrix v = cloner_isometry(m);
    const ComplexMatrix vv = naive_kron(v, v);
    const ComplexMatrix big = vv * rho * vv.adjoint();
    const std::array<std::size_t, 6> dims = {2, 2, 2, 2, 2, 2};
    const std::array<std::size_t, 2> keep = {0, 3};
    return partial_trace(big, dims, keep);
}

std::vector<Machine> local_presets() {
    return {presets::local_bh(), presets::universal(), presets::one_pauli_like(), presets::two_pauli_like()};
}

}  // namespace

TEST_CASE("coefficient validation") {
    CHECK_NOTHROW(MachineCoefficients::from_squares(0.5, 0.25));
    CHECK_THROWS_AS(MachineCoefficients::from_squares(0.5, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(MachineCoefficients::from_squares(-0.1, 0.55), std::invalid_argument);
    CHECK_THROWS_AS(MachineCoefficients(1.0, 0.0, 0.0, 4.5), std::invalid_argument);
    const MachineCoefficients with_c = MachineCoefficients::from_squares(0.5, 0.2, 0.1);
    CHECK_THROWS_AS(apply_local_cloner(with_c, DensityOperator::maximally_mixed(4)), std::invalid_argument);
    const MachineCoefficients low_mu = MachineCoefficients::from_squares(0.5, 0.25, 0.0, 2.0);
    CHECK_THROWS_AS(apply_local_cloner(low_mu, DensityOperator::maximally_mixed(4)), std::invalid_argument);
}

TEST_CASE("preset coefficients") {
    const auto sq = [](const Machine &m) {
        const MachineCoefficients &c = *m.coefficients();
        return std::array<double, 2>{c.a_abs * c.a_abs, c.b_abs * c.b_abs};
    };
    CHECK(sq(presets::local_bh())[0] == doctest::Approx(2.0 / 3.0));
    CHECK(sq(presets::local_bh())[1] == doctest::Approx(1.0 / 6.0));
    CHECK(sq(presets::universal())[0] == doctest::Approx(0.5));
    CHECK(sq(presets::universal())[1] == doctest::Approx(0.25));
    CHECK(sq(presets::one_pauli_like())[0] == doctest::Approx(1.0));
    CHECK(sq(presets::one_pauli_like())[1] == doctest::Approx(0.0));
    CHECK(sq(presets::two_pauli_like())[0] == doctest::Approx(kU2).epsilon(1e-14));
    CHECK(sq(presets::two_pauli_like())[1] == doctest::Approx(kV2).epsilon(1e-14));
    CHECK_FALSE(presets::nonlocal_bh().is_local());
}

TEST_CASE("registry") {
    const auto reg = machine_registry();
    REQUIRE(reg.size() == 5);
    CHECK(reg[0].name() == "local-bh");
    CHECK(reg[1].name() == "nonlocal-bh");
    for (const auto &m : reg) {
        REQUIRE(find_machine(m.name()).has_value());
        CHECK(find_machine(m.name())->name() == m.name());
    }
    CHECK_FALSE(find_machine("bogus").has_value());
    CHECK(machine_names(",") == "local-bh,nonlocal-bh,universal,one-pauli-like,two-pauli-like");
}

TEST_CASE("isometry is norm preserving") {
    for (const auto &m : local_presets()) {
        const ComplexMatrix v = cloner_isometry(*m.coefficients());
        REQUIRE(v.rows() == 8);
        REQUIRE(v.cols() == 2);
        CHECK((v.adjoint() * v).approx_equal(ComplexMatrix::identity(2), 1e-14));
    }
}

TEST_CASE("single-qubit B-H fidelity is 5/6 on random inputs") {
    Rng rng = make_rng(31);
    const MachineCoefficients bh = *presets::local_bh().coefficients();
    for (int trial = 0; trial < 50; ++trial) {
        const PureState psi = random_pure(rng, 2);
        CHECK(fidelity_pure(psi, apply_single_qubit_cloner(bh, DensityOperator(psi))) ==
              doctest::Approx(5.0 / 6.0).epsilon(1e-13));
    }
    const ShrinkFactors s = single_qubit_shrink(bh);
    CHECK(s.lambda_xy == doctest::Approx(2.0 / 3.0));
    CHECK(s.lambda_z == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("Bloch map agrees with dilation on arbitrary inputs") {
    Rng rng = make_rng(32);
    for (const auto &m : local_presets()) {
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho = random_density(rng);
            const DensityOperator out = m.apply(rho);
            CHECK(out.matrix().max_abs_diff(dilation_reference(*m.coefficients(), rho.matrix())) < 1e-12);
        }
    }
}

TEST_CASE("Bloch map agrees with the six-qubit unitary on Schmidt inputs") {
    Rng rng = make_rng(33);
    for (const auto &m : local_presets()) {
        for (int trial = 0; trial < 25; ++trial) {
            const PureSchmidtState s = PureSchmidtState::from_alpha_squared(uniform(rng));
            const DensityOperator oracle = full_unitary_oracle(*m.coefficients(), s);
            CHECK(m.apply(pure_to_density(s)).matrix().max_abs_diff(oracle.matrix()) < 1e-10);
            const PureState full = full_unitary_state(*m.coefficients(), s);
            CHECK(clone_pair_state(full, 0).matrix().max_abs_diff(clone_pair_state(full, 1).matrix()) < 1e-14);
        }
    }
}

TEST_CASE("non-local B-H is the 3/5 depolarizing map") {
    const NonLocalBHSpec spec;
    CHECK(spec.shrink() == doctest::Approx(0.6));
    CHECK(spec.c_coef() == doctest::Approx(std::sqrt(0.4)));
    CHECK(spec.d_coef() == doctest::Approx(std::sqrt(0.1)));
    Rng rng = make_rng(34);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityOperator rho = random_density(rng);
        const ComplexMatrix expected = 0.6 * rho.matrix() + 0.1 * ComplexMatrix::identity(4);
        CHECK(apply_nonlocal_bh(rho).matrix().max_abs_diff(expected) < 1e-15);
        const PureSchmidtState s = PureSchmidtState::from_alpha_squared(uniform(rng));
        CHECK(machine_fidelity(presets::nonlocal_bh(), s) == doctest::Approx(0.7).epsilon(1e-14));
    }
}

TEST_CASE("fidelity closed forms") {
    Rng rng = make_rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        const double a2 = uniform(rng);
        const double b2 = 1.0 - a2;
        const PureSchmidtState s = PureSchmidtState::from_alpha_squared(a2);
        CHECK(machine_fidelity(presets::universal(), s) == doctest::Approx(9.0 / 16.0).epsilon(1e-13));
        CHECK(machine_fidelity(presets::one_pauli_like(), s) == doctest::Approx(1.0 - 2.0 * a2 * b2).epsilon(1e-13));
        // Local B-H: lambda = 2/3 on every axis.
        const double l = 2.0 / 3.0;
        const double r11 = a2 * (1 + l) * (1 + l) / 4 + b2 * (1 - l) * (1 - l) / 4;
        const double r44 = b2 * (1 + l) * (1 + l) / 4 + a2 * (1 - l) * (1 - l) / 4;
        const double r14 = l * l * std::sqrt(a2 * b2);
        const double f = a2 * r11 + b2 * r44 + 2.0 * std::sqrt(a2 * b2) * r14;
        CHECK(machine_fidelity(presets::local_bh(), s) == doctest::Approx(f).epsilon(1e-13));
    }
}

TEST_CASE("average fidelities") {
    CHECK(average_fidelity(presets::local_bh()) == doctest::Approx(67.0 / 108.0).epsilon(1e-10));
    CHECK(average_fidelity(presets::one_pauli_like()) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(average_fidelity(presets::universal()) == doctest::Approx(9.0 / 16.0).epsilon(1e-10));
    CHECK(average_fidelity(presets::nonlocal_bh()) == doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("Werner correlation scaling") {
    struct Case {
        Machine machine;
        double s12, s3;
    };
    const std::vector<Case> cases = {{presets::local_bh(), 4.0 / 9.0, 4.0 / 9.0},
                                     {presets::nonlocal_bh(), 0.6, 0.6},
                                     {presets::universal(), 0.5, 0.25},
                                     {presets::two_pauli_like(), 4.0 * kU2 * kV2, kU2 * kU2}};
    for (const auto &c : cases) {
        for (double x : {-1.0, -0.3, 0.2, 0.8}) {
            const double t = (2.0 * x - 1.0) / 3.0;
            const BlochForm b = bloch_decompose(c.machine.apply(werner_to_density(WernerState(x))));
            CHECK(b.t[0][0] == doctest::Approx(c.s12 * t).epsilon(1e-13));
            CHECK(b.t[1][1] == doctest::Approx(c.s12 * t).epsilon(1e-13));
            CHECK(b.t[2][2] == doctest::Approx(c.s3 * t).epsilon(1e-13));
        }
    }
}

TEST_CASE("one-pauli-like output is diagonal") {
    for (double a2 : {0.0, 0.2, 0.5, 0.9}) {
        const DensityOperator out = presets::one_pauli_like().apply(pure_to_density(PureSchmidtState::from_alpha_squared(a2)));
        CHECK(out.matrix().approx_equal(ComplexMatrix::diagonal({a2, 0.0, 0.0, 1.0 - a2}), 1e-14));
    }
}
