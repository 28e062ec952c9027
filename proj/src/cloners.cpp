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

#include "qclone/cloners.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qclone {

namespace {

constexpr double kCoefficientTol = 1e-12;

void require_c_zero(const MachineCoefficients &m, const char *who) {
    if (m.c_abs > kCoefficientTol) {
        throw std::invalid_argument(std::string(who) + ": only machines with |c| = 0 are supported");
    }
}

void require_mu_saturated(const MachineCoefficients &m, const char *who) {
    if (std::abs(m.mu - 4.0) > kCoefficientTol) {
        throw std::invalid_argument(std::string(who) + ": the Bloch map is defined for mu = 4 only");
    }
}

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)> &f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    // The first four levels always subdivide.
    if (depth <= 0 || (depth < 46 && std::abs(delta) <= 15.0 * tol)) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)> &f, double a, double b, double tol) {
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    return adaptive_simpson(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 50);
}

}  // namespace

MachineCoefficients::MachineCoefficients(double a_abs_, double b_abs_, double c_abs_, double mu_)
    : a_abs(a_abs_), b_abs(b_abs_), c_abs(c_abs_), mu(mu_) {
    for (double v : {a_abs, b_abs, c_abs}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw std::invalid_argument("MachineCoefficients: |a|, |b|, |c| must lie in [0, 1]");
        }
    }
    if (!(mu >= 0.0 && mu <= 4.0)) {
        throw std::invalid_argument("MachineCoefficients: mu must lie in [0, 4]");
    }
    const double norm = a_abs * a_abs + 2.0 * b_abs * b_abs + c_abs * c_abs;
    if (std::abs(norm - 1.0) > kCoefficientTol) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "MachineCoefficients: |a|^2 + 2|b|^2 + |c|^2 = " << norm << ", not 1";
        throw std::invalid_argument(msg.str());
    }
}

MachineCoefficients MachineCoefficients::from_squares(double a2, double b2, double c2, double mu) {
    if (a2 < 0.0 || b2 < 0.0 || c2 < 0.0) {
        throw std::invalid_argument("MachineCoefficients: squared amplitudes must be nonnegative");
    }
    return MachineCoefficients(std::sqrt(a2), std::sqrt(b2), std::sqrt(c2), mu);
}

double NonLocalBHSpec::c_coef() const {
    return std::sqrt(2.0 / (dimension + 1.0));
}

double NonLocalBHSpec::d_coef() const {
    return std::sqrt(1.0 / (2.0 * (dimension + 1.0)));
}

double NonLocalBHSpec::shrink() const {
    return (dimension + 2.0) / (2.0 * (dimension + 1.0));
}

// ---------------------------------------------------------------------------
// Machine

Machine::Machine(std::string name, MachineKind kind, std::optional<MachineCoefficients> coefficients)
    : name_(std::move(name)), kind_(kind), coefficients_(std::move(coefficients)) {
}

Machine Machine::local(std::string name, MachineCoefficients coefficients, MachineKind kind) {
    if (kind == MachineKind::NonlocalBH) {
        throw std::invalid_argument("Machine::local: the non-local B-H machine has no local coefficients");
    }
    require_c_zero(coefficients, "Machine::local");
    require_mu_saturated(coefficients, "Machine::local");
    return Machine(std::move(name), kind, coefficients);
}

Machine Machine::nonlocal_bh() {
    return Machine("nonlocal-bh", MachineKind::NonlocalBH, std::nullopt);
}

DensityOperator Machine::apply(const DensityOperator &rho_in) const {
    if (coefficients_) {
        return apply_local_cloner(*coefficients_, rho_in);
    }
    return apply_nonlocal_bh(rho_in);
}

namespace presets {

Machine local_bh() {
    return Machine::local("local-bh", MachineCoefficients::from_squares(2.0 / 3.0, 1.0 / 6.0), MachineKind::LocalBH);
}

Machine universal() {
    return Machine::local("universal", MachineCoefficients(1.0 / std::sqrt(2.0), 0.5), MachineKind::Universal);
}

Machine one_pauli_like() {
    return Machine::local("one-pauli-like", MachineCoefficients(1.0, 0.0), MachineKind::OnePauliLike);
}

Machine two_pauli_like() {
    const double r = std::sqrt(79.0);
    return Machine::local("two-pauli-like", MachineCoefficients::from_squares((4.0 + r) / 21.0, (17.0 - r) / 42.0),
                          MachineKind::TwoPauliLike);
}

Machine nonlocal_bh() {
    return Machine::nonlocal_bh();
}

}  // namespace presets

std::span<const Machine> machine_registry() {
    static const std::array<Machine, 5> kMachines = {
        presets::local_bh(), presets::nonlocal_bh(), presets::universal(), presets::one_pauli_like(),
        presets::two_pauli_like(),
    };
    return kMachines;
}

std::optional<Machine> find_machine(std::string_view name) {
    for (const auto &m : machine_registry()) {
        if (m.name() == name) {
            return m;
        }
    }
    return std::nullopt;
}

std::string machine_names(std::string_view separator) {
    std::string out;
    for (const auto &m : machine_registry()) {
        if (!out.empty()) {
            out += separator;
        }
        out += m.name();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bloch-space maps

ShrinkFactors single_qubit_shrink(const MachineCoefficients &m) {
    require_c_zero(m, "single_qubit_shrink");
    return {2.0 * m.a_abs * m.b_abs, m.a_abs * m.a_abs};
}

DensityOperator apply_single_qubit_cloner(const MachineCoefficients &m, const DensityOperator &rho_in) {
    require_mu_saturated(m, "apply_single_qubit_cloner");
    if (rho_in.dim() != 2) {
        throw std::invalid_argument("apply_single_qubit_cloner: expected a single-qubit (2x2) operator");
    }
    const ShrinkFactors f = single_qubit_shrink(m);
    const std::array<double, 3> lambda = {f.lambda_xy, f.lambda_xy, f.lambda_z};
    ComplexMatrix out = ComplexMatrix::identity(2);
    for (int i = 1; i <= 3; ++i) {
        const double r = (rho_in.matrix() * pauli(i)).trace().real();
        out += pauli(i) * Complex{lambda[i - 1] * r, 0.0};
    }
    return DensityOperator(out * Complex{0.5, 0.0});
}

DensityOperator apply_local_cloner(const MachineCoefficients &m, const DensityOperator &rho_in) {
    require_mu_saturated(m, "apply_local_cloner");
    const ShrinkFactors f = single_qubit_shrink(m);
    const std::array<double, 3> lambda = {f.lambda_xy, f.lambda_xy, f.lambda_z};

    BlochForm b = bloch_decompose(rho_in);
    for (int i = 0; i < 3; ++i) {
        b.x[i] *= lambda[i];
        b.y[i] *= lambda[i];
        for (int j = 0; j < 3; ++j) {
            b.t[i][j] *= lambda[i] * lambda[j];
        }
    }
    try {
        return bloch_compose(b);
    } catch (const UnphysicalStateError &e) {
        throw std::logic_error(std::string("apply_local_cloner produced an unphysical state: ") + e.what());
    }
}

DensityOperator apply_nonlocal_bh(const DensityOperator &rho_in) {
    if (rho_in.dim() != 4) {
        throw std::invalid_argument("apply_nonlocal_bh: expected a two-qubit (4x4) operator");
    }
    const NonLocalBHSpec spec;
    const double eta = spec.shrink();
    return DensityOperator(rho_in.matrix() * Complex{eta, 0.0} +
                           ComplexMatrix::identity(4) * Complex{(1.0 - eta) / spec.dimension, 0.0});
}

// ---------------------------------------------------------------------------
// Explicit-state oracle

ComplexMatrix cloner_isometry(const MachineCoefficients &m) {
    require_c_zero(m, "cloner_isometry");
    require_mu_saturated(m, "cloner_isometry");
    // Row index = 4*clone1 + 2*clone2 + ancilla.
    ComplexMatrix v(8, 2);
    // U|0> = a|00>|A> + b(|01> + |10>)|A_perp>
    v(0b000, 0) = m.a_abs;
    v(0b011, 0) = m.b_abs;
    v(0b101, 0) = m.b_abs;
    // U|1> = a|11>|A_perp> + b(|10> + |01>)|A>
    v(0b111, 1) = m.a_abs;
    v(0b100, 1) = m.b_abs;
    v(0b010, 1) = m.b_abs;
    return v;
}

PureState full_unitary_state(const MachineCoefficients &m, const PureSchmidtState &s) {
    const ComplexMatrix v = cloner_isometry(m);
    const ComplexMatrix both = tensor(v, v);
    const PureState in = s.ket();
    const ComplexMatrix out = both * ComplexMatrix::column(in.amplitudes());
    std::vector<Complex> amps(out.entries().begin(), out.entries().end());
    return PureState(std::move(amps));
}

DensityOperator clone_pair_state(const PureState &full_state, int pair) {
    if (full_state.dim() != 64) {
        throw std::invalid_argument("clone_pair_state: expected a six-qubit state");
    }
    if (pair != 0 && pair != 1) {
        throw std::invalid_argument("clone_pair_state: pair must be 0 or 1");
    }
    static constexpr std::array<std::size_t, 6> kDims = {2, 2, 2, 2, 2, 2};
    const std::array<std::size_t, 2> keep = {static_cast<std::size_t>(pair), static_cast<std::size_t>(pair) + 3};
    return DensityOperator(partial_trace(full_state.projector(), kDims, keep));
}

DensityOperator full_unitary_oracle(const MachineCoefficients &m, const PureSchmidtState &s) {
    return clone_pair_state(full_unitary_state(m, s), 0);
}

// ---------------------------------------------------------------------------
// Fidelities

double machine_fidelity(const Machine &machine, const PureSchmidtState &s) {
    return fidelity_pure(s.ket(), machine.apply(pure_to_density(s)));
}

double machine_fidelity(const MachineCoefficients &m, const PureSchmidtState &s) {
    return fidelity_pure(s.ket(), apply_local_cloner(m, pure_to_density(s)));
}

double average_fidelity(const Machine &machine) {
    return integrate(
        [&machine](double alpha2) {
            return machine_fidelity(machine, PureSchmidtState::from_alpha_squared(alpha2));
        },
        0.0, 1.0, 1e-8);
}

}  // namespace qclone
