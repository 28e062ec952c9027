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

#include "qclone/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qclone {

namespace {

constexpr double kPhysicalTol = 1e-12;

/// -p log2(p / q), with 0 whenever p or q vanishes.
double conditional_term(double p, double q) {
    if (p <= 0.0 || q <= 0.0) {
        return 0.0;
    }
    return -p * std::log2(p / q);
}

/// x log2 x with 0 log 0 = 0.
double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

std::string_view to_string(DiscordBranch branch) {
    return branch == DiscordBranch::C1 ? "C1" : "C2";
}

double binary_entropy(double p) {
    p = std::clamp(p, 0.0, 1.0);
    return -xlog2x(p) - xlog2x(1.0 - p);
}

double concurrence_wootters(const DensityOperator &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("concurrence_wootters: expected a two-qubit (4x4) state");
    }
    const ComplexMatrix yy = tensor(pauli(2), pauli(2));
    const ComplexMatrix flipped = yy * rho.matrix().conjugate() * yy;
    const ComplexMatrix root = sqrt_psd(rho.matrix());
    ComplexMatrix r = root * flipped * root;
    // Symmetrize away roundoff before the Hermitian solver sees it.
    r = (r + r.adjoint()) * Complex{0.5, 0.0};
    const HermitianEigen e = eig_hermitian(r);
    std::array<double, 4> s{};
    for (std::size_t k = 0; k < 4; ++k) {
        s[k] = std::sqrt(std::max(e.values[k], 0.0));
    }
    return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

double concurrence_x(const XState &x) {
    const double g14 = std::sqrt(std::max(x.r11() * x.r44(), 0.0));
    const double g23 = std::sqrt(std::max(x.r22() * x.r33(), 0.0));
    const std::array<double, 4> mu = {g14 + std::abs(x.r14()), g14 - std::abs(x.r14()), g23 + std::abs(x.r23()),
                                      g23 - std::abs(x.r23())};
    const double largest = *std::max_element(mu.begin(), mu.end());
    const double total = mu[0] + mu[1] + mu[2] + mu[3];
    return std::clamp(2.0 * largest - total, 0.0, 1.0);
}

double eof(double concurrence) {
    if (!(concurrence >= -kPhysicalTol && concurrence <= 1.0 + kPhysicalTol)) {
        throw std::invalid_argument("eof: concurrence must lie in [0, 1]");
    }
    const double c = std::clamp(concurrence, 0.0, 1.0);
    return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
}

DiscordResult discord_x(const XState &x) {
    const double r11 = x.r11(), r22 = x.r22(), r33 = x.r33(), r44 = x.r44();
    const double r14 = x.r14(), r23 = x.r23();

    // Spectrum of an X-state: two 2x2 blocks.
    const double h14 = std::hypot(0.5 * (r11 - r44), r14);
    const double h23 = std::hypot(0.5 * (r22 - r33), r23);
    const std::array<double, 4> spectrum = {0.5 * (r11 + r44) + h14, 0.5 * (r11 + r44) - h14,
                                            0.5 * (r22 + r33) + h23, 0.5 * (r22 + r33) - h23};
    const double s_rho = entropy_bits(spectrum);
    const std::array<double, 2> marginal_b = {r11 + r33, r22 + r44};
    const double s_rho_b = entropy_bits(marginal_b);

    const double c1 = conditional_term(r11, r11 + r33) + conditional_term(r22, r22 + r44) +
                      conditional_term(r33, r11 + r33) + conditional_term(r44, r22 + r44);

    const double z = r11 + r22 - r33 - r44;
    const double w = std::abs(r14) + std::abs(r23);
    const double upsilon = std::min(std::sqrt(z * z + 4.0 * w * w), 1.0);
    const double c2 = binary_entropy(0.5 * (1.0 + upsilon));

    const DiscordBranch branch = c1 <= c2 ? DiscordBranch::C1 : DiscordBranch::C2;
    const double value = s_rho_b - s_rho + std::min(c1, c2);
    return {std::max(value, 0.0), {s_rho, s_rho_b, c1, c2, upsilon, branch}};
}

double measured_conditional_entropy(const BlochForm &b, double theta, double phi) {
    const std::array<double, 3> n = {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                                     std::cos(theta)};
    double yn = 0.0;
    std::array<double, 3> tn{};
    for (int i = 0; i < 3; ++i) {
        yn += b.y[i] * n[i];
        for (int j = 0; j < 3; ++j) {
            tn[i] += b.t[i][j] * n[j];
        }
    }
    double total = 0.0;
    for (double sign : {1.0, -1.0}) {
        const double weight = 1.0 + sign * yn;  // 2 p(outcome)
        if (weight <= 1e-15) {
            continue;
        }
        double r2 = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double ri = (b.x[i] + sign * tn[i]) / weight;
            r2 += ri * ri;
        }
        const double r = std::min(std::sqrt(r2), 1.0);
        total += 0.5 * weight * binary_entropy(0.5 * (1.0 + r));
    }
    return total;
}

double discord_oracle(const DensityOperator &rho, const DiscordOracleOptions &options) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("discord_oracle: expected a two-qubit (4x4) state");
    }
    if (options.theta_steps < 2 || options.phi_steps < 1 || !(options.refine_tol > 0.0)) {
        throw std::invalid_argument("discord_oracle: invalid grid options");
    }
    const BlochForm b = bloch_decompose(rho);
    const double pi = std::numbers::pi;
    const double dtheta = pi / (options.theta_steps - 1);
    const double dphi = 2.0 * pi / options.phi_steps;

    struct Candidate {
        double value, theta, phi;
    };
    std::vector<Candidate> grid;
    grid.reserve(static_cast<std::size_t>(options.theta_steps) * static_cast<std::size_t>(options.phi_steps));
    for (int i = 0; i < options.theta_steps; ++i) {
        const double theta = i * dtheta;
        for (int j = 0; j < options.phi_steps; ++j) {
            const double phi = j * dphi;
            grid.push_back({measured_conditional_entropy(b, theta, phi), theta, phi});
        }
    }
    // Refine from the few best grid points; distinct basins can tie.
    const std::size_t seeds = std::min<std::size_t>(4, grid.size());
    std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(seeds), grid.end(),
                      [](const Candidate &l, const Candidate &r) {
                          if (l.value != r.value) return l.value < r.value;
                          if (l.theta != r.theta) return l.theta < r.theta;
                          return l.phi < r.phi;
                      });

    double best = grid.front().value;
    for (std::size_t s = 0; s < seeds; ++s) {
        Candidate cur = grid[s];
        double step_theta = dtheta;
        double step_phi = dphi;
        while (step_theta > options.refine_tol || step_phi > options.refine_tol) {
            bool moved = false;
            for (auto [dt, dp] : {std::pair{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}) {
                const double theta = cur.theta + dt * step_theta;
                const double phi = cur.phi + dp * step_phi;
                const double v = measured_conditional_entropy(b, theta, phi);
                if (v < cur.value) {
                    cur = {v, theta, phi};
                    moved = true;
                }
            }
            if (!moved) {
                step_theta *= 0.5;
                step_phi *= 0.5;
            }
        }
        best = std::min(best, cur.value);
    }

    constexpr std::array<std::size_t, 2> kDims = {2, 2};
    constexpr std::array<std::size_t, 1> kKeepB = {1};
    const double s_rho_b = von_neumann_entropy(partial_trace(rho, kDims, kKeepB));
    const double s_rho = von_neumann_entropy(rho);
    return std::max(s_rho_b - s_rho + best, 0.0);
}

double werner_discord_closed(double t) {
    if (!(t >= -1.0 - kPhysicalTol && t <= 1.0 / 3.0 + kPhysicalTol)) {
        throw std::invalid_argument("werner_discord_closed: t must lie in [-1, 1/3]");
    }
    const double d = 0.25 * xlog2x(1.0 + t) + 0.25 * xlog2x(1.0 - 3.0 * t) - 0.5 * xlog2x(1.0 - t);
    return std::max(d, 0.0);
}

double bell_diag_discord_closed(double t1, double t3) {
    const std::array<double, 3> eig = {1.0 + t3, 1.0 + 2.0 * t1 - t3, 1.0 - 2.0 * t1 - t3};
    if (*std::min_element(eig.begin(), eig.end()) < -4.0 * kPhysicalTol || std::abs(t1) > 1.0) {
        throw std::invalid_argument("bell_diag_discord_closed: (t1, t3) is not a physical Bell-diagonal state");
    }
    if (std::abs(t3) > std::abs(t1) + kPhysicalTol) {
        throw std::invalid_argument("bell_diag_discord_closed: closed form requires |t1| >= |t3|");
    }
    const double d = 0.25 * xlog2x(1.0 + 2.0 * t1 - t3) + 0.25 * xlog2x(1.0 - 2.0 * t1 - t3) +
                     0.5 * xlog2x(1.0 + t3) - 0.5 * xlog2x(1.0 + t1) - 0.5 * xlog2x(1.0 - t1);
    return std::max(d, 0.0);
}

double werner_concurrence_closed(double t) {
    return std::max(0.0, 0.25 * (std::abs(3.0 * t - 1.0) - 3.0 * std::abs(t + 1.0)));
}

double bell_diag_concurrence_closed(double t1, double t3) {
    const double s = 2.0 * t1 + t3;
    return std::max(0.0, 0.25 * (std::abs(s - 1.0) - std::abs(s + 1.0) - 2.0 * std::abs(t3 + 1.0)));
}

CorrelationReport correlation_report(const XState &x) {
    const double c = concurrence_x(x);
    const DiscordResult d = discord_x(x);
    return {c, eof(c), d.value, d.parts.branch};
}

}  // namespace qclone
