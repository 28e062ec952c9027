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

#include <clocale>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qclone/sweep.hpp"
#include "qclone/verify.hpp"

using namespace qclone;

TEST_CASE("family parsing and ranges") {
    CHECK(parse_family("pure") == InputFamily::Pure);
    CHECK(parse_family("werner") == InputFamily::Werner);
    CHECK_FALSE(parse_family("bell").has_value());
    CHECK(grid_parameter(InputFamily::Pure, 0, 201) == 0.0);
    CHECK(grid_parameter(InputFamily::Pure, 200, 201) == 1.0);
    CHECK(grid_parameter(InputFamily::Pure, 100, 201) == 0.5);
    CHECK(grid_parameter(InputFamily::Werner, 0, 201) == -1.0);
    CHECK(grid_parameter(InputFamily::Werner, 150, 201) == 0.5);
    CHECK_THROWS_AS(grid_parameter(InputFamily::Pure, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(presets::universal(), InputFamily::Pure, 1), std::invalid_argument);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.5625) == "0.5625");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.0 / 3.0) == "0.333333333");
    CHECK(format_number(-1.0) == "-1");
    CHECK(format_number(1.5e-12) == "1.5e-12");
}

TEST_CASE("universal row at alpha^2 = 1/2") {
    const CurveRow row = evaluate_point(presets::universal(), InputFamily::Pure, 0.5);
    CHECK(row.fidelity == doctest::Approx(0.5625).epsilon(1e-14));
    CHECK(row.concurrence == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(row.eof == doctest::Approx(eof(0.125)).epsilon(1e-14));
}

TEST_CASE("non-local B-H Werner discord follows the closed form") {
    const auto rows = run_sweep(presets::nonlocal_bh(), InputFamily::Werner, 201);
    for (const auto &r : rows) {
        const double t = 0.6 * (2.0 * r.parameter - 1.0) / 3.0;
        CHECK(r.discord == doctest::Approx(werner_discord_closed(t)).epsilon(1e-12));
    }
}

TEST_CASE("local B-H entanglement vanishes near the product states") {
    // Threshold alpha^2 beta^2 = 25/256.
    const double edge = 0.5 * (1.0 - std::sqrt(1.0 - 100.0 / 256.0));
    const auto rows = run_sweep(presets::local_bh(), InputFamily::Pure, 201);
    for (const auto &r : rows) {
        if (r.parameter <= 0.109 || r.parameter >= 0.891) {
            CHECK(r.concurrence == 0.0);
        } else if (r.parameter > edge + 1e-3 && r.parameter < 1.0 - edge - 1e-3) {
            CHECK(r.concurrence > 0.0);
        }
    }
}

TEST_CASE("threaded sweep equals serial evaluation") {
    for (const auto &m : machine_registry()) {
        for (InputFamily f : {InputFamily::Pure, InputFamily::Werner}) {
            const auto rows = run_sweep(m, f, 37);
            REQUIRE(rows.size() == 37);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                const CurveRow serial = evaluate_point(m, f, grid_parameter(f, k, 37));
                CHECK(rows[k].parameter == serial.parameter);
                CHECK(rows[k].discord == serial.discord);
                CHECK(rows[k].eof == serial.eof);
                CHECK(std::isfinite(rows[k].fidelity));
                CHECK(rows[k].concurrence >= 0.0);
                CHECK(rows[k].eof >= 0.0);
                CHECK(rows[k].discord >= 0.0);
            }
        }
    }
}

TEST_CASE("CSV output is stable and locale independent") {
    const auto rows = run_sweep(presets::two_pauli_like(), InputFamily::Werner, 51);
    std::ostringstream a, b;
    write_csv(a, rows);
    std::setlocale(LC_ALL, "de_DE.UTF-8");
    write_csv(b, run_sweep(presets::two_pauli_like(), InputFamily::Werner, 51));
    std::setlocale(LC_ALL, "C");
    CHECK(a.str() == b.str());
    const std::string text = a.str();
    CHECK(text.rfind("parameter,fidelity,concurrence,eof,discord,discord_branch\n", 0) == 0);
    std::size_t lines = 0;
    for (char ch : text) lines += ch == '\n';
    CHECK(lines == 52);
}

TEST_CASE("Uhlmann fidelity") {
    const DensityOperator rho = werner_to_density(WernerState(0.2));
    CHECK(uhlmann_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-12));
    const DensityOperator pure = pure_to_density(PureSchmidtState::from_alpha_squared(0.3));
    const DensityOperator mixed = DensityOperator::maximally_mixed(4);
    CHECK(uhlmann_fidelity(pure, mixed) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("verify report semantics") {
    CHECK(make_check(Suite::Constants, "", "x", "r", 1.0, 1.001, 1e-2).status == CheckStatus::Pass);
    CHECK(make_check(Suite::Constants, "", "x", "r", 1.0, 1.1, 1e-2).status == CheckStatus::Fail);
    CHECK(make_check(Suite::Constants, "", "x", "r", 1.0, 1.1, 1e-2, true).status == CheckStatus::Flag);
    CHECK(make_check(Suite::Constants, "", "x", "r", 1.0, NAN, 1e-2).status == CheckStatus::Fail);

    const auto optima = run_verification(Suite::Optima);
    CHECK(all_passed(optima));
    const auto universal_only = run_verification(Suite::Optima, "universal");
    CHECK_FALSE(universal_only.empty());
    for (const auto &r : universal_only) CHECK(r.machine == "universal");
    std::ostringstream os;
    write_report(os, optima);
    CHECK(os.str().find("passed") != std::string::npos);
}
