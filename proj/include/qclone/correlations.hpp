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

#include <string_view>

#include "qclone/matrix.hpp"
#include "qclone/states.hpp"

namespace qclone {

/// Which measurement term attained the minimum in discord_x: C1 is the
/// σ3 measurement on B, C2 the equatorial one.
enum class DiscordBranch { C1, C2 };

std::string_view to_string(DiscordBranch branch);

struct DiscordIntermediates {
    double s_rho;    // S(rho)
    double s_rho_b;  // S(rho_B)
    double c1;
    double c2;
    double upsilon;
    DiscordBranch branch;
};

struct DiscordResult {
    double value;
    DiscordIntermediates parts;
};

struct CorrelationReport {
    double concurrence;
    double eof;
    double discord;
    DiscordBranch branch;
};

/// h(p) = -p log2 p - (1-p) log2(1-p), with 0 log 0 = 0.
double binary_entropy(double p);

/// Wootters concurrence from the spectrum of sqrt(rho) rho~ sqrt(rho),
/// rho~ = (σ2⊗σ2) rho* (σ2⊗σ2). Valid for any two-qubit state.
double concurrence_wootters(const DensityOperator &rho);

/// Closed form 2 max(0, |r14| - sqrt(r22 r33), |r23| - sqrt(r11 r44)).
double concurrence_x(const XState &x);

/// Entanglement of formation h((1 + sqrt(1 - c^2))/2), in bits.
double eof(double concurrence);

/// D_B = S(rho_B) - S(rho) + min{C1, C2} for a real X-state.
DiscordResult discord_x(const XState &x);

struct DiscordOracleOptions {
    int theta_steps = 64;
    int phi_steps = 128;
    double refine_tol = 1e-7;
};

/// Discord with measurements on B found by direct minimization of the
/// post-measurement conditional entropy over projective measurement axes:
/// dense (theta, phi) grid, then pattern-search refinement. Independent of
/// the X-state closed form; works for any two-qubit state.
double discord_oracle(const DensityOperator &rho, const DiscordOracleOptions &options = {});

/// Conditional entropy of A after measuring B along the unit vector with
/// polar angles (theta, phi), averaged over both outcomes.
double measured_conditional_entropy(const BlochForm &b, double theta, double phi);

/// Discord of a Bell-diagonal state with t1 = t2 = t3 = t, t in [-1, 1/3].
double werner_discord_closed(double t);

/// Discord of a Bell-diagonal state with t1 = t2 and t3, assuming
/// |t1| >= |t3| (the equatorial measurement is optimal there).
double bell_diag_discord_closed(double t1, double t3);

/// max{0, (|3t - 1| - 3|t + 1|)/4}, evaluated literally.
double werner_concurrence_closed(double t);

/// max{0, (|2t1 + t3 - 1| - |2t1 + t3 + 1| - 2|t3 + 1|)/4}, evaluated
/// literally. Known to disagree with concurrence_wootters on part of its
/// domain; see the verify report.
double bell_diag_concurrence_closed(double t1, double t3);

CorrelationReport correlation_report(const XState &x);

}  // namespace qclone
