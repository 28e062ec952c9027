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

#include "qclone/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

namespace qclone {

std::optional<InputFamily> parse_family(std::string_view name) {
    if (name == "pure") return InputFamily::Pure;
    if (name == "werner") return InputFamily::Werner;
    return std::nullopt;
}

std::string_view to_string(InputFamily family) {
    return family == InputFamily::Pure ? "pure" : "werner";
}

std::pair<double, double> family_range(InputFamily family) {
    return family == InputFamily::Pure ? std::pair{0.0, 1.0} : std::pair{-1.0, 1.0};
}

double grid_parameter(InputFamily family, std::size_t k, std::size_t n) {
    if (n < 2 || k >= n) {
        throw std::invalid_argument("grid_parameter: need n >= 2 and k < n");
    }
    const auto [lo, hi] = family_range(family);
    if (k == n - 1) {
        return hi;
    }
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

DensityOperator family_input(InputFamily family, double parameter) {
    if (family == InputFamily::Pure) {
        return pure_to_density(PureSchmidtState::from_alpha_squared(parameter));
    }
    return werner_to_density(WernerState(parameter));
}

double uhlmann_fidelity(const DensityOperator &rho, const DensityOperator &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("uhlmann_fidelity: dimension mismatch");
    }
    const ComplexMatrix root = sqrt_psd(rho.matrix());
    ComplexMatrix inner = root * sigma.matrix() * root;
    inner = (inner + inner.adjoint()) * Complex{0.5, 0.0};
    double tr = 0.0;
    for (double ev : eig_hermitian(inner).values) {
        tr += std::sqrt(std::max(ev, 0.0));
    }
    return std::clamp(tr * tr, 0.0, 1.0);
}

CurveRow evaluate_point(const Machine &machine, InputFamily family, double parameter) {
    const DensityOperator in = family_input(family, parameter);
    const DensityOperator out = machine.apply(in);
    const double fidelity =
        family == InputFamily::Pure
            ? fidelity_pure(PureSchmidtState::from_alpha_squared(parameter).ket(), out)
            : uhlmann_fidelity(in, out);
    const CorrelationReport r = correlation_report(as_x_state(out));
    return {parameter, fidelity, r.concurrence, r.eof, r.discord, r.branch};
}

std::vector<CurveRow> run_sweep(const Machine &machine, InputFamily family, std::size_t grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("run_sweep: at least 2 grid points are required");
    }
    std::vector<CurveRow> rows(grid_points);
    const std::size_t workers =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::min<std::size_t>(grid_points, 16));
    std::vector<std::future<void>> jobs;
    jobs.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t k = w; k < grid_points; k += workers) {
                rows[k] = evaluate_point(machine, family, grid_parameter(family, k, grid_points));
            }
        }));
    }
    for (auto &job : jobs) {
        job.get();
    }
    return rows;
}

std::string format_number(double value) {
    if (value == 0.0) {
        value = 0.0;  // drop the sign of -0
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 9);
    if (res.ec != std::errc{}) {
        throw std::runtime_error("format_number: conversion failed");
    }
    return std::string(buf.data(), res.ptr);
}

void write_csv_header(std::ostream &out) {
    out << "parameter,fidelity,concurrence,eof,discord,discord_branch\n";
}

void write_csv_row(std::ostream &out, const CurveRow &row) {
    out << format_number(row.parameter) << ',' << format_number(row.fidelity) << ','
        << format_number(row.concurrence) << ',' << format_number(row.eof) << ',' << format_number(row.discord)
        << ',' << to_string(row.discord_branch) << '\n';
}

void write_csv(std::ostream &out, std::span<const CurveRow> rows) {
    write_csv_header(out);
    for (const auto &row : rows) {
        write_csv_row(out, row);
    }
}

}  // namespace qclone
