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

#include "qclone/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qclone/channels.hpp"
#include "qclone/cloners.hpp"
#include "qclone/correlations.hpp"
#include "qclone/optimize.hpp"
#include "qclone/sweep.hpp"

namespace qclone {

namespace {

constexpr double kRounded = 5e-3;
constexpr double kExact = 1e-9;
constexpr double kEntry = 5e-4;
constexpr double kOracle = 1e-10;
constexpr double kDiscordOracle = 1e-5;
constexpr std::size_t kCoarseGrid = 21;
constexpr std::uint64_t kSeed = 20261016;

class Collector {
   public:
    explicit Collector(Suite suite) : suite_(suite) {}

    void add(std::string machine, std::string name, std::string reference, double expected, double actual,
             double tol, bool known_discrepancy = false, std::string note = {}) {
        results_.push_back(make_check(suite_, std::move(machine), std::move(name), std::move(reference), expected,
                                      actual, tol, known_discrepancy, std::move(note)));
    }

    std::vector<CheckResult> take() { return std::move(results_); }

   private:
    Suite suite_;
    std::vector<CheckResult> results_;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

const Machine &machine_named(std::string_view name) {
    for (const auto &m : machine_registry()) {
        if (m.name() == name) return m;
    }
    throw std::logic_error("unknown preset machine");
}

double two_pauli_u() { return (4.0 + std::sqrt(79.0)) / 21.0; }
double two_pauli_v() { return (17.0 - std::sqrt(79.0)) / 42.0; }

/// Random real X-state: Dirichlet diagonal, anti-diagonal entries a random
/// fraction of their positivity bound.
XState random_x_state(std::mt19937_64 &rng) {
    std::exponential_distribution<double> expo(1.0);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::array<double, 4> d{};
    double total = 0.0;
    for (double &v : d) {
        v = expo(rng);
        total += v;
    }
    for (double &v : d) v /= total;
    const double r14 = unit(rng) * std::sqrt(d[0] * d[3]);
    const double r23 = unit(rng) * std::sqrt(d[1] * d[2]);
    return XState(d[0], d[1], d[2], d[3], r14, r23);
}

std::vector<CheckResult> constants_suite() {
    Collector c(Suite::Constants);

    // local-bh
    {
        const Machine &m = machine_named("local-bh");
        const MachineCoefficients &k = *m.coefficients();
        double fmin = 1.0, fmax = 0.0;
        for (int i = 0; i <= 12; ++i) {
            for (int j = 0; j < 8; ++j) {
                const double theta = std::numbers::pi * i / 12.0;
                const double phi = 2.0 * std::numbers::pi * j / 8.0;
                const PureState psi({Complex{std::cos(theta / 2.0), 0.0},
                                     std::polar(std::sin(theta / 2.0), phi)});
                const double f = fidelity_pure(psi, apply_single_qubit_cloner(k, DensityOperator(psi)));
                fmin = std::min(fmin, f);
                fmax = std::max(fmax, f);
            }
        }
        c.add("local-bh", "single-qubit B-H fidelity min over Bloch sphere", "5/6 for every input", 5.0 / 6.0,
              fmin, kExact);
        c.add("local-bh", "single-qubit B-H fidelity max over Bloch sphere", "5/6 for every input", 5.0 / 6.0,
              fmax, kExact);
        const ShrinkFactors s = single_qubit_shrink(k);
        c.add("local-bh", "local-bh Bloch shrink lambda_xy", "2/3", 2.0 / 3.0, s.lambda_xy, kExact);
        c.add("local-bh", "local-bh Bloch shrink lambda_z", "2/3", 2.0 / 3.0, s.lambda_z, kExact);
        const double avg = average_fidelity(m);
        c.add("local-bh", "local-bh average fidelity 67/108 vs 0.62 (tol 5e-3)", "printed average 0.62", 0.62, avg,
              kRounded);
        c.add("local-bh", "local-bh average fidelity vs 67/108", "exact integral 67/108", 67.0 / 108.0, avg,
              kExact);
    }

    // nonlocal-bh
    {
        const Machine &m = machine_named("nonlocal-bh");
        double worst = 0.0;
        for (std::size_t k = 0; k < 101; ++k) {
            const double a2 = grid_parameter(InputFamily::Pure, k, 101);
            worst = std::max(worst, std::abs(machine_fidelity(m, PureSchmidtState::from_alpha_squared(a2)) - 0.7));
        }
        c.add("nonlocal-bh", "nonlocal-bh fidelity 0.7 on 101-point grid (max deviation)", "0.7 for all alpha",
              0.0, worst, kExact);
    }

    // universal
    {
        const Machine &m = machine_named("universal");
        std::vector<double> f;
        for (std::size_t k = 0; k < 101; ++k) {
            const double a2 = grid_parameter(InputFamily::Pure, k, 101);
            f.push_back(machine_fidelity(m, PureSchmidtState::from_alpha_squared(a2)));
        }
        double mean = 0.0;
        for (double v : f) mean += v;
        mean /= static_cast<double>(f.size());
        double var = 0.0, worst = 0.0;
        for (double v : f) {
            var += (v - mean) * (v - mean);
            worst = std::max(worst, std::abs(v - 9.0 / 16.0));
        }
        var /= static_cast<double>(f.size());
        c.add("universal", "universal fidelity 9/16 on 101-point grid (max deviation)", "9/16 for all alpha", 0.0,
              worst, kExact);
        c.add("universal", "universal fidelity variance over alpha", "independent of alpha", 0.0, var, 1e-20);
    }

    // one-pauli-like
    {
        const Machine &m = machine_named("one-pauli-like");
        const double avg = average_fidelity(m);
        c.add("one-pauli-like", "one-pauli-like average fidelity 2/3 vs 0.66 (tol 5e-3)", "printed average 0.66",
              0.66, avg, kRounded, true, "printed value is 2/3 truncated, not rounded");
        c.add("one-pauli-like", "one-pauli-like average fidelity vs 2/3", "exact integral of 1 - 2 a^2 b^2",
              2.0 / 3.0, avg, kExact);
        const DensityOperator out = m.apply(pure_to_density(PureSchmidtState::from_alpha_squared(0.3)));
        const ComplexMatrix expected = ComplexMatrix::diagonal({0.3, 0.0, 0.0, 0.7});
        c.add("one-pauli-like", "one-pauli-like output at alpha^2=0.3 is diag(a^2,0,0,b^2)",
              "diagonal output", 0.0, out.matrix().max_abs_diff(expected), kExact);
    }

    // two-pauli-like
    {
        const Machine &m = machine_named("two-pauli-like");
        const double u = two_pauli_u();
        const double v = two_pauli_v();
        const double avg = average_fidelity(m);
        const double s = (8.0 * (u + v) * (u + v) - 3.0) / 5.0;
        const double exact_avg = (3.0 + 5.0 * s) / 8.0 - (4.0 * (1.0 - s) / 8.0) / 6.0;
        c.add("two-pauli-like", "two-pauli-like average fidelity vs 0.604 (tol 5e-3)", "printed average 0.604",
              0.604, avg, kRounded);
        c.add("two-pauli-like", "two-pauli-like average fidelity vs closed form", "(3+5s)/8 - (1-s)/12", exact_avg,
              avg, kExact);

        const auto out_at = [&m](double a2) {
            return m.apply(pure_to_density(PureSchmidtState::from_alpha_squared(a2)));
        };
        const double r11_a = out_at(1.0)(0, 0).real();
        const double r11_b = out_at(0.0)(0, 0).real();
        const double r22 = out_at(0.3)(1, 1).real();
        const double r14 = out_at(0.5)(0, 3).real() / 0.5;
        c.add("two-pauli-like", "|00><00| alpha^2 coefficient vs 0.6510", "printed entry 0.6510", 0.6510, r11_a,
              kEntry);
        c.add("two-pauli-like", "|00><00| beta^2 coefficient vs 0.0337", "printed entry 0.0337", 0.0337, r11_b,
              kEntry, true, "printed digits transposed; 0.0337 breaks unit trace, exact value is ((1-u)/2)^2");
        c.add("two-pauli-like", "|01><01| entry vs 0.1558", "printed entry 0.1558", 0.1558, r22, kEntry);
        c.add("two-pauli-like", "|00><11| alpha beta coefficient vs 0.4741", "printed entry 0.4741", 0.4741, r14,
              kEntry);
        c.add("two-pauli-like", "|00><00| alpha^2 coefficient vs ((1+u)/2)^2", "closed form",
              (1.0 + u) * (1.0 + u) / 4.0, r11_a, kExact);
        c.add("two-pauli-like", "|00><00| beta^2 coefficient vs ((1-u)/2)^2", "closed form",
              (1.0 - u) * (1.0 - u) / 4.0, r11_b, kExact);
        c.add("two-pauli-like", "|01><01| entry vs (1-u^2)/4", "closed form", (1.0 - u * u) / 4.0, r22, kExact);
        c.add("two-pauli-like", "|00><11| coefficient vs 4uv", "closed form", 4.0 * u * v, r14, kExact);
    }
    return c.take();
}

std::vector<CheckResult> oracles_suite() {
    Collector c(Suite::Oracles);
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (const auto &m : machine_registry()) {
        if (!m.is_local()) continue;
        double worst = 0.0;
        for (int i = 0; i < 25; ++i) {
            const PureSchmidtState s = PureSchmidtState::from_alpha_squared(unit(rng));
            const DensityOperator bloch = m.apply(pure_to_density(s));
            worst = std::max(worst, bloch.matrix().max_abs_diff(full_unitary_oracle(*m.coefficients(), s).matrix()));
        }
        c.add(m.name(), m.name() + " Bloch map vs six-qubit unitary (25 random alpha)", "max entry deviation", 0.0,
              worst, kOracle);
    }

    {
        double worst_c = 0.0, worst_d = 0.0;
        for (int i = 0; i < 200; ++i) {
            const XState x = random_x_state(rng);
            worst_c = std::max(worst_c, std::abs(concurrence_x(x) - concurrence_wootters(x.to_density())));
            if (i < 50) {
                worst_d = std::max(worst_d, std::abs(discord_x(x).value - discord_oracle(x.to_density())));
            }
        }
        c.add("", "X-state concurrence vs Wootters (200 random X-states)", "max deviation", 0.0, worst_c, kOracle);
        c.add("", "X-state discord vs measurement oracle (50 random X-states)", "max deviation", 0.0, worst_d,
              kDiscordOracle);
    }

    for (const auto &m : machine_registry()) {
        for (InputFamily family : {InputFamily::Pure, InputFamily::Werner}) {
            double worst_c = 0.0, worst_d = 0.0;
            for (std::size_t k = 0; k < kCoarseGrid; ++k) {
                const double p = grid_parameter(family, k, kCoarseGrid);
                const DensityOperator out = m.apply(family_input(family, p));
                const XState x = as_x_state(out);
                worst_c = std::max(worst_c, std::abs(concurrence_x(x) - concurrence_wootters(out)));
                worst_d = std::max(worst_d, std::abs(discord_x(x).value - discord_oracle(out)));
            }
            const std::string tag = m.name() + " " + std::string(to_string(family)) + " sweep";
            c.add(m.name(), tag + " concurrence vs Wootters", "max deviation", 0.0, worst_c, kOracle);
            c.add(m.name(), tag + " discord vs measurement oracle", "max deviation", 0.0, worst_d, kDiscordOracle);
        }
    }

    // Werner-family closed forms on the clone pair.
    for (const auto &m : machine_registry()) {
        if (m.kind() == MachineKind::OnePauliLike) continue;
        const bool isotropic = m.kind() == MachineKind::LocalBH || m.kind() == MachineKind::NonlocalBH;
        double worst_d = 0.0, worst_c = 0.0;
        for (std::size_t k = 0; k < 201; ++k) {
            const double x = grid_parameter(InputFamily::Werner, k, 201);
            const DensityOperator out = m.apply(family_input(InputFamily::Werner, x));
            const BlochForm b = bloch_decompose(out);
            const double t1 = b.t[0][0];
            const double t3 = b.t[2][2];
            const double d_closed = isotropic ? werner_discord_closed(t1) : bell_diag_discord_closed(t1, t3);
            worst_d = std::max(worst_d, std::abs(d_closed - discord_x(as_x_state(out)).value));
            if (x < 0.5) {
                const double c_literal =
                    isotropic ? werner_concurrence_closed(t1) : bell_diag_concurrence_closed(t1, t3);
                worst_c = std::max(worst_c, std::abs(c_literal - concurrence_wootters(out)));
            }
        }
        const std::string family = isotropic ? "Werner-output" : "Bell-diagonal-output";
        c.add(m.name(), m.name() + " " + family + " discord closed form vs X-state formula",
              "literal closed form", 0.0, worst_d, kOracle);
        c.add(m.name(), m.name() + " " + family + " concurrence literal form vs Wootters (x < 1/2)",
              "literal closed form", 0.0, worst_c, kOracle, true,
              "printed concurrence formula disagrees with the Wootters value; the Wootters value is used");
    }
    return c.take();
}

std::vector<CheckResult> optima_suite() {
    Collector c(Suite::Optima);
    {
        const OptimizationProblem p{Objective::FidelitySquared, 4.0};
        const OptimizationResult r = solve_constrained(p);
        c.add("universal", "universal optimum |a|^2", "1/2", 0.5, r.u_star, kExact);
        c.add("universal", "universal optimum |b|^2", "1/4", 0.25, r.v_star, kExact);
        c.add("universal", "universal optimum |c|", "0", 0.0, r.c_star, kExact);
        c.add("universal", "universal optimum fidelity", "9/16", 9.0 / 16.0, r.objective_value, kExact);
        c.add("universal", "universal optimum coupling residual", "0", 0.0, r.constraint_residuals.at(1), kExact);
        const GridSearchResult g = grid_search_optimum(p);
        c.add("universal", "universal grid search |b|^2 agrees with exact root", "exact root", r.v_star, g.v, 1e-6);
        const CZeroCheck z = verify_c_zero(p);
        c.add("universal", "universal objective peaks on the c = 0 face", "c = 0", 0.0, z.best_c_squared, kExact);
    }
    {
        const OptimizationProblem p{Objective::SParam, 4.0};
        const OptimizationResult r = solve_constrained(p);
        const double s = r.objective_value;
        c.add("two-pauli-like", "two-pauli-like optimum |a|^2 vs (4+sqrt79)/21", "closed form", two_pauli_u(),
              r.u_star, kExact);
        c.add("two-pauli-like", "two-pauli-like optimum |b|^2 vs (17-sqrt79)/42", "closed form", two_pauli_v(),
              r.v_star, kExact);
        c.add("two-pauli-like", "two-pauli-like coupling residual", "0", 0.0, r.constraint_residuals.at(1), kExact);
        c.add("two-pauli-like", "fidelity constant 3+5s vs 5.205", "printed 5.205", 5.205, 3.0 + 5.0 * s,
              kRounded);
        c.add("two-pauli-like", "fidelity slope 4(1-s) vs 2.236", "printed 2.236", 2.236, 4.0 * (1.0 - s),
              kRounded);
        const GridSearchResult g = grid_search_optimum(p);
        c.add("two-pauli-like", "two-pauli-like grid search |b|^2 agrees with exact root", "exact root", r.v_star,
              g.v, 1e-6);
        const CZeroCheck z = verify_c_zero(p);
        c.add("two-pauli-like", "two-pauli-like objective peaks on the c = 0 face", "c = 0", 0.0,
              z.best_c_squared, kExact);
    }
    {
        const OptimizationResult r = solve_constrained({Objective::FidelitySquared, 0.0});
        c.add("", "mu = 0 forces |a| = 0", "|b|^2 = 1/2", 0.0, r.u_star, kExact);
    }
    return c.take();
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
    if (name == "constants") return Suite::Constants;
    if (name == "oracles") return Suite::Oracles;
    if (name == "optima") return Suite::Optima;
    if (name == "all") return Suite::All;
    return std::nullopt;
}

std::string_view to_string(Suite suite) {
    switch (suite) {
        case Suite::Constants: return "constants";
        case Suite::Oracles: return "oracles";
        case Suite::Optima: return "optima";
        case Suite::All: return "all";
    }
    return "all";
}

std::string_view to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Flag: return "FLAG";
    }
    return "FAIL";
}

CheckResult make_check(Suite suite, std::string machine, std::string name, std::string reference, double expected,
                       double actual, double tolerance, bool known_discrepancy, std::string note) {
    const bool ok = std::isfinite(actual) && std::abs(actual - expected) <= tolerance;
    const CheckStatus status = ok ? CheckStatus::Pass : (known_discrepancy ? CheckStatus::Flag : CheckStatus::Fail);
    if (ok) note.clear();
    return {suite, std::move(machine), std::move(name), std::move(reference), expected, actual, tolerance, status,
            std::move(note)};
}

std::vector<CheckResult> run_verification(Suite suite, std::optional<std::string_view> machine) {
    std::vector<CheckResult> all;
    const auto append = [&all](std::vector<CheckResult> part) {
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    if (suite == Suite::Constants || suite == Suite::All) append(constants_suite());
    if (suite == Suite::Oracles || suite == Suite::All) append(oracles_suite());
    if (suite == Suite::Optima || suite == Suite::All) append(optima_suite());
    if (machine) {
        std::erase_if(all, [&](const CheckResult &r) { return r.machine != *machine; });
    }
    return all;
}

bool all_passed(const std::vector<CheckResult> &results) {
    return std::none_of(results.begin(), results.end(),
                        [](const CheckResult &r) { return r.status == CheckStatus::Fail; });
}

void write_report(std::ostream &out, const std::vector<CheckResult> &results) {
    std::size_t counts[3] = {0, 0, 0};
    for (const auto &r : results) {
        ++counts[static_cast<int>(r.status)];
        out << '[' << to_string(r.status) << "] " << to_string(r.suite) << ": " << r.name << " | reference: "
            << r.reference << " | expected " << fmt(r.expected) << ", actual " << fmt(r.actual) << ", tol "
            << fmt(r.tolerance);
        if (!r.note.empty()) out << " | " << r.note;
        out << '\n';
    }
    out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " flagged\n";
}

}  // namespace qclone
