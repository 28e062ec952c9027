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

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qclone {

enum class Suite { Constants, Oracles, Optima, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

/// PASS and FAIL are the usual outcomes. FLAG marks a check against a
/// printed value or formula that is known to be wrong: the deviation is
/// reported but does not fail the suite.
enum class CheckStatus { Pass, Fail, Flag };

std::string_view to_string(CheckStatus status);

struct CheckResult {
    Suite suite;
    std::string machine;  // empty for machine-independent checks
    std::string name;
    std::string reference;
    double expected;
    double actual;
    double tolerance;
    CheckStatus status;
    std::string note;
};

/// Builds a result: PASS when |actual - expected| <= tolerance, otherwise
/// FLAG if `known_discrepancy` is set and FAIL if not.
CheckResult make_check(Suite suite, std::string machine, std::string name, std::string reference,
                       double expected, double actual, double tolerance, bool known_discrepancy = false,
                       std::string note = {});

/// Runs the checks of `suite` (every suite for Suite::All). With a machine
/// name, only checks tagged with that machine are kept.
std::vector<CheckResult> run_verification(Suite suite, std::optional<std::string_view> machine = std::nullopt);

/// True iff no check has status FAIL.
bool all_passed(const std::vector<CheckResult> &results);

void write_report(std::ostream &out, const std::vector<CheckResult> &results);

}  // namespace qclone
