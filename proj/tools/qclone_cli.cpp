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

// qclone: sweeps, fidelities and verification reports for the cloning
// machines in the qclone library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qclone/cloners.hpp"
#include "qclone/sweep.hpp"
#include "qclone/verify.hpp"

namespace {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kIoError = 2, kUnknownMachine = 3, kBadParameter = 4 };

struct UsageError {
    int code;
    std::string message;
};

qclone::Machine require_machine(const std::string &name) {
    if (auto m = qclone::find_machine(name)) {
        return *m;
    }
    throw UsageError{kUnknownMachine,
                     "unknown machine '" + name + "'; valid names: " + qclone::machine_names(", ")};
}

int cmd_sweep(const std::string &machine_name, const std::string &family_name, std::size_t points,
              std::optional<double> alpha2, std::optional<double> x, const std::string &out_path) {
    const qclone::Machine machine = require_machine(machine_name);
    const auto family = qclone::parse_family(family_name);
    if (!family) {
        throw UsageError{kBadParameter, "unknown family '" + family_name + "'; valid: pure, werner"};
    }
    if (points < 2) {
        throw UsageError{kBadParameter, "--points must be at least 2"};
    }
    if (alpha2 && x) {
        throw UsageError{kBadParameter, "--alpha2 and --x are mutually exclusive"};
    }
    if (alpha2 && *family != qclone::InputFamily::Pure) {
        throw UsageError{kBadParameter, "--alpha2 applies to the pure family"};
    }
    if (x && *family != qclone::InputFamily::Werner) {
        throw UsageError{kBadParameter, "--x applies to the werner family"};
    }
    if (alpha2 && !(*alpha2 >= 0.0 && *alpha2 <= 1.0)) {
        throw UsageError{kBadParameter, "--alpha2 must lie in [0, 1]"};
    }
    if (x && !(*x >= -1.0 && *x <= 1.0)) {
        throw UsageError{kBadParameter, "--x must lie in [-1, 1]"};
    }

    std::vector<qclone::CurveRow> rows;
    if (alpha2 || x) {
        rows.push_back(qclone::evaluate_point(machine, *family, alpha2 ? *alpha2 : *x));
    } else {
        rows = qclone::run_sweep(machine, *family, points);
    }

    if (out_path.empty() || out_path == "-") {
        qclone::write_csv(std::cout, rows);
        std::cout.flush();
        return std::cout ? kOk : kIoError;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw UsageError{kIoError, "cannot open '" + out_path + "' for writing"};
    }
    qclone::write_csv(out, rows);
    out.close();
    if (!out) {
        throw UsageError{kIoError, "write to '" + out_path + "' failed"};
    }
    return kOk;
}

int cmd_fidelity(const std::string &machine_name, std::optional<double> alpha2, bool average) {
    const qclone::Machine machine = require_machine(machine_name);
    if (average == alpha2.has_value()) {
        throw UsageError{kBadParameter, "give exactly one of --alpha2 or --average"};
    }
    double value = 0.0;
    if (average) {
        value = qclone::average_fidelity(machine);
    } else {
        if (!(*alpha2 >= 0.0 && *alpha2 <= 1.0)) {
            throw UsageError{kBadParameter, "--alpha2 must lie in [0, 1]"};
        }
        value = qclone::machine_fidelity(machine, qclone::PureSchmidtState::from_alpha_squared(*alpha2));
    }
    std::printf("%.6f\n", value);
    return kOk;
}

int cmd_verify(const std::string &suite_name, const std::string &machine_name) {
    const auto suite = qclone::parse_suite(suite_name);
    if (!suite) {
        throw UsageError{kBadParameter, "unknown suite '" + suite_name + "'; valid: constants, oracles, optima, all"};
    }
    std::optional<std::string_view> filter;
    if (!machine_name.empty()) {
        require_machine(machine_name);
        filter = machine_name;
    }
    const auto results = qclone::run_verification(*suite, filter);
    qclone::write_report(std::cout, results);
    return qclone::all_passed(results) ? kOk : kVerifyFailed;
}

int cmd_list_machines() {
    for (const auto &m : qclone::machine_registry()) {
        std::cout << m.name() << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Two-qubit cloning machines: fidelity, entanglement and discord"};
    app.require_subcommand(1);

    std::string machine;
    std::string family = "pure";
    std::size_t points = 201;
    std::optional<double> alpha2;
    std::optional<double> x;
    std::string out_path;
    bool average = false;
    std::string suite = "all";

    auto *sweep = app.add_subcommand("sweep", "Emit correlation curves as CSV");
    sweep->add_option("--machine", machine, "Machine name")->required();
    sweep->add_option("--family", family, "Input family: pure or werner");
    sweep->add_option("--points", points, "Grid points (default 201)");
    sweep->add_option("--alpha2", alpha2, "Evaluate a single pure input alpha^2");
    sweep->add_option("--x", x, "Evaluate a single Werner input x");
    sweep->add_option("--out", out_path, "Output CSV path (default stdout)");

    auto *fidelity = app.add_subcommand("fidelity", "Fidelity at alpha^2 or averaged over alpha^2");
    fidelity->add_option("machine,--machine", machine, "Machine name")->required();
    fidelity->add_option("--alpha2", alpha2, "alpha^2 in [0, 1]");
    fidelity->add_flag("--average", average, "Average over alpha^2 in [0, 1]");

    auto *verify = app.add_subcommand("verify", "Run verification checks");
    verify->add_option("suite,--suite", suite, "constants, oracles, optima or all (default all)");
    verify->add_option("--machine", machine, "Only checks for this machine");

    auto *list = app.add_subcommand("list-machines", "Print the machine names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kBadParameter;
    }

    try {
        if (sweep->parsed()) return cmd_sweep(machine, family, points, alpha2, x, out_path);
        if (fidelity->parsed()) return cmd_fidelity(machine, alpha2, average);
        if (verify->parsed()) return cmd_verify(suite, machine);
        if (list->parsed()) return cmd_list_machines();
    } catch (const UsageError &e) {
        std::cerr << "qclone: " << e.message << '\n';
        return e.code;
    } catch (const std::invalid_argument &e) {
        std::cerr << "qclone: " << e.what() << '\n';
        return kBadParameter;
    }
    return kBadParameter;
}
