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

#include <stdexcept>
#include <vector>

namespace qclone {

class InfeasibleProblemError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Objectives of the two cloner design problems, written in the squared
/// amplitudes u = |a|^2, v = |b|^2 with w = u + v.
enum class Objective {
    /// F = w^2, coupling 2w - 1 = u v mu (universal machine).
    FidelitySquared,
    /// s = (8 w^2 - 3)/5, coupling (8 w^2 - 28)/5 + 8 w = 4 u v mu
    /// (two-Pauli-like machine).
    SParam,
};

struct OptimizationProblem {
    Objective objective = Objective::FidelitySquared;
    double mu = 4.0;

    /// Throws std::invalid_argument unless mu lies in [0, 4].
    void validate() const;
};

struct OptimizationResult {
    double u_star;  // |a|^2
    double v_star;  // |b|^2
    double c_star;  // |c|
    double objective_value;
    /// {normalization, coupling}
    std::vector<double> constraint_residuals;
    /// Every real root of the coupling quadratic on [0, 1/2], as (v, objective).
    std::vector<std::pair<double, double>> candidates;
};

double objective_value(const OptimizationProblem &problem, double u, double v);

/// Residual of the coupling constraint at (u, v); zero on the feasible set.
double coupling_residual(const OptimizationProblem &problem, double u, double v);

/// Substitutes c = 0 and u = 1 - 2v, solves the coupling quadratic in v
/// exactly, and returns the feasible root with the largest objective
/// (smallest v on ties). Throws InfeasibleProblemError if no root lies in
/// [0, 1/2].
OptimizationResult solve_constrained(const OptimizationProblem &problem);

struct GridSearchResult {
    double u;
    double v;
    double objective_value;
    std::size_t feasible_points;
};

/// Scans v on a uniform grid over [0, 1/2] with u = 1 - 2v, keeps grid
/// points where |coupling| <= constraint_tol plus linear-interpolated roots
/// of sign changes between neighbours, and returns the best one.
GridSearchResult grid_search_optimum(const OptimizationProblem &problem, double step = 1e-4,
                                     double constraint_tol = 1e-6);

struct CZeroCheck {
    bool max_on_c_zero_face;
    double best_c_squared;
    double best_objective;
    double best_objective_c_zero;
    std::size_t feasible_points;
};

/// Scans (c^2, v) over the simplex u + 2v + c^2 = 1 with the given step,
/// locates feasible points of the coupling constraint along each c^2 row,
/// and reports where the objective peaks.
CZeroCheck verify_c_zero(const OptimizationProblem &problem, double step = 5e-3);

}  // namespace qclone
