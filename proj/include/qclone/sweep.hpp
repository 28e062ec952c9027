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

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qclone/cloners.hpp"
#include "qclone/correlations.hpp"

namespace qclone {

enum class InputFamily { Pure, Werner };

std::optional<InputFamily> parse_family(std::string_view name);
std::string_view to_string(InputFamily family);

struct SweepConfig {
    std::string machine;
    InputFamily family = InputFamily::Pure;
    std::size_t grid_points = 201;
};

/// One row of a figure curve. `parameter` is alpha^2 for pure inputs and x
/// for Werner inputs.
struct CurveRow {
    double parameter;
    double fidelity;
    double concurrence;
    double eof;
    double discord;
    DiscordBranch discord_branch;
};

/// Input state of the family at the given parameter.
DensityOperator family_input(InputFamily family, double parameter);

/// Parameter range of the family: [0, 1] for pure, [-1, 1] for Werner.
std::pair<double, double> family_range(InputFamily family);

/// Grid point k of n, evaluated as lo + (hi - lo) k/(n - 1).
double grid_parameter(InputFamily family, std::size_t k, std::size_t n);

/// Correlations of the machine output at one parameter value. For Werner
/// inputs the fidelity column is the Uhlmann fidelity between the input and
/// output states.
CurveRow evaluate_point(const Machine &machine, InputFamily family, double parameter);

/// Rows in parameter order; computed on worker threads.
std::vector<CurveRow> run_sweep(const Machine &machine, InputFamily family, std::size_t grid_points);

/// 9 significant digits, '.' decimal point regardless of locale.
std::string format_number(double value);

void write_csv_header(std::ostream &out);
void write_csv_row(std::ostream &out, const CurveRow &row);
void write_csv(std::ostream &out, std::span<const CurveRow> rows);

/// (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double uhlmann_fidelity(const DensityOperator &rho, const DensityOperator &sigma);

}  // namespace qclone
