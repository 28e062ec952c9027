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

#include "qclone/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

namespace qclone {

namespace {

constexpr double kRootSlack = 1e-12;

struct Quadratic {
    double a, b, c;  // a v^2 + b v + c
};

/// Coupling constraint after substituting c = 0, u = 1 - 2v, w = 1 - v.
Quadratic coupling_in_v(const OptimizationProblem &problem) {
    const double mu = problem.mu;
    switch (problem.objective) {
        case Objective::FidelitySquared:
            // 2(1 - v) - 1 - mu (1 - 2v) v
            return {2.0 * mu, -(mu + 2.0), 1.0};
        case Objective::SParam:
            // [8(1 - v)^2 - 28]/5 + 8(1 - v) - 4 mu (1 - 2v) v
            return {(8.0 + 40.0 * mu) / 5.0, -(56.0 + 20.0 * mu) / 5.0, 4.0};
    }
    throw std::logic_error("unknown objective");
}

std::vector<double> real_roots(const Quadratic &q) {
    if (std::abs(q.a) < 1e-300) {
        if (q.b == 0.0) {
            return {};
        }
        return {-q.c / q.b};
    }
    double disc = q.b * q.b - 4.0 * q.a * q.c;
    const double scale = q.b * q.b + std::abs(4.0 * q.a * q.c);
    if (disc < 0.0 && disc > -1e-14 * scale) {
        disc = 0.0;
    }
    if (disc < 0.0) {
        return {};
    }
    const double root = std::sqrt(disc);
    const double s = -0.5 * (q.b + std::copysign(root, q.b));
    if (s == 0.0) {
        return {0.0};
    }
    std::vector<double> out = {s / q.a, q.c / s};
    std::sort(out.begin(), out.end());
    return out;
}

/// Feasible coupling roots along one row of fixed c^2: grid points where
/// |g| <= tol, and interpolated sign changes between neighbours.
std::vector<double> bracketed_roots(const OptimizationProblem &problem, double c2, double step, double tol) {
    const double v_max = 0.5 * (1.0 - c2);
    const auto n = static_cast<long>(std::floor(v_max / step + 1e-9));
    std::vector<double> roots;
    double prev_v = 0.0;
    double prev_g = 0.0;
    for (long k = 0; k <= n; ++k) {
        const double v = static_cast<double>(k) * step;
        const double u = std::max(1.0 - 2.0 * v - c2, 0.0);
        const double g = coupling_residual(problem, u, v);
        if (std::abs(g) <= tol) {
            roots.push_back(v);
        } else if (k > 0 && std::abs(prev_g) > tol && (prev_g < 0.0) != (g < 0.0)) {
            roots.push_back(prev_v - prev_g * (v - prev_v) / (g - prev_g));
        }
        prev_v = v;
        prev_g = g;
    }
    return roots;
}

}  // namespace

void OptimizationProblem::validate() const {
    if (!(mu >= 0.0 && mu <= 4.0)) {
        throw std::invalid_argument("OptimizationProblem: mu must lie in [0, 4]");
    }
}

double objective_value(const OptimizationProblem &problem, double u, double v) {
    const double w = u + v;
    switch (problem.objective) {
        case Objective::FidelitySquared:
            return w * w;
        case Objective::SParam:
            return (8.0 * w * w - 3.0) / 5.0;
    }
    throw std::logic_error("unknown objective");
}

double coupling_residual(const OptimizationProblem &problem, double u, double v) {
    const double w = u + v;
    switch (problem.objective) {
        case Objective::FidelitySquared:
            return 2.0 * w - 1.0 - u * v * problem.mu;
        case Objective::SParam:
            return (8.0 * w * w - 28.0) / 5.0 + 8.0 * w - 4.0 * u * v * problem.mu;
    }
    throw std::logic_error("unknown objective");
}

OptimizationResult solve_constrained(const OptimizationProblem &problem) {
    problem.validate();
    OptimizationResult result{};
    std::optional<std::size_t> best;
    for (double v : real_roots(coupling_in_v(problem))) {
        if (v < -kRootSlack || v > 0.5 + kRootSlack) {
            continue;
        }
        v = std::clamp(v, 0.0, 0.5);
        const double u = 1.0 - 2.0 * v;
        result.candidates.emplace_back(v, objective_value(problem, u, v));
        // Roots arrive sorted ascending, so strict improvement keeps the smallest v on ties.
        if (!best || result.candidates.back().second > result.candidates[*best].second) {
            best = result.candidates.size() - 1;
        }
    }
    if (!best) {
        throw InfeasibleProblemError("solve_constrained: the coupling constraint has no root with |b|^2 in [0, 1/2]");
    }
    const auto [v, f] = result.candidates[*best];
    result.v_star = v;
    result.u_star = 1.0 - 2.0 * v;
    result.c_star = 0.0;
    result.objective_value = f;
    result.constraint_residuals = {result.u_star + 2.0 * result.v_star - 1.0,
                                   coupling_residual(problem, result.u_star, result.v_star)};
    return result;
}

GridSearchResult grid_search_optimum(const OptimizationProblem &problem, double step, double constraint_tol) {
    problem.validate();
    if (!(step > 0.0 && step < 0.5)) {
        throw std::invalid_argument("grid_search_optimum: step must lie in (0, 1/2)");
    }
    const std::vector<double> roots = bracketed_roots(problem, 0.0, step, constraint_tol);
    if (roots.empty()) {
        throw InfeasibleProblemError("grid_search_optimum: no feasible grid point");
    }
    GridSearchResult best{0.0, 0.0, -INFINITY, roots.size()};
    for (double v : roots) {
        const double u = 1.0 - 2.0 * v;
        const double f = objective_value(problem, u, v);
        if (f > best.objective_value) {
            best = {u, v, f, roots.size()};
        }
    }
    return best;
}

CZeroCheck verify_c_zero(const OptimizationProblem &problem, double step) {
    problem.validate();
    if (!(step > 0.0 && step < 0.5)) {
        throw std::invalid_argument("verify_c_zero: step must lie in (0, 1/2)");
    }
    CZeroCheck out{false, 0.0, -INFINITY, -INFINITY, 0};
    const auto rows = static_cast<long>(std::floor(1.0 / step + 1e-9));
    for (long i = 0; i <= rows; ++i) {
        const double c2 = static_cast<double>(i) * step;
        for (double v : bracketed_roots(problem, c2, step, 1e-12)) {
            const double u = std::max(1.0 - 2.0 * v - c2, 0.0);
            const double f = objective_value(problem, u, v);
            ++out.feasible_points;
            if (f > out.best_objective) {
                out.best_objective = f;
                out.best_c_squared = c2;
            }
            if (i == 0) {
                out.best_objective_c_zero = std::max(out.best_objective_c_zero, f);
            }
        }
    }
    if (out.feasible_points == 0) {
        throw InfeasibleProblemError("verify_c_zero: no feasible point on the simplex");
    }
    out.max_on_c_zero_face = out.best_objective_c_zero >= out.best_objective - 1e-9;
    return out;
}

}  // namespace qclone
