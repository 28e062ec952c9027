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
#include <span>
#include <string>
#include <string_view>

#include "qclone/matrix.hpp"
#include "qclone/states.hpp"

namespace qclone {

/// Amplitudes of the symmetric 1 -> 2 cloning transformation
///
///   U|0>|b>|X> = |a| |00>|A> + |b| (|01> + |10>)|B> + |c| |11>|C>
///   U|1>|b>|X> = |a| |11>|A'> + |b| (|10> + |01>)|B'> + |c| |00>|C'>
///
/// together with mu = Re(<A|B'> + <B|A'>)^2, the ancilla overlap that
/// couples the two branches.
struct MachineCoefficients {
    double a_abs;
    double b_abs;
    double c_abs;
    double mu;

    /// Validates ranges and a^2 + 2 b^2 + c^2 = 1 within 1e-12.
    MachineCoefficients(double a_abs, double b_abs, double c_abs = 0.0, double mu = 4.0);

    static MachineCoefficients from_squares(double a2, double b2, double c2 = 0.0, double mu = 4.0);
};

/// Bloch-vector scale factors of the single-qubit clone map.
struct ShrinkFactors {
    double lambda_xy;  // 2|a||b|
    double lambda_z;   // |a|^2
};

/// B-H machine on an M-dimensional system, used here for the M = 4
/// non-local two-qubit cloner.
struct NonLocalBHSpec {
    int dimension = 4;

    double c_coef() const;  // sqrt(2/(M+1))
    double d_coef() const;  // sqrt(1/(2(M+1)))
    /// eta in rho -> eta rho + (1 - eta) I/M, i.e. (M+2)/(2(M+1)).
    double shrink() const;
};

enum class MachineKind { LocalBH, Universal, OnePauliLike, TwoPauliLike, NonlocalBH, Custom };

/// A named cloning machine: either a local symmetric cloner applied on each
/// side, or the non-local B-H depolarizing map.
class Machine {
   public:
    static Machine local(std::string name, MachineCoefficients coefficients,
                         MachineKind kind = MachineKind::Custom);
    static Machine nonlocal_bh();

    const std::string &name() const { return name_; }
    MachineKind kind() const { return kind_; }
    bool is_local() const { return coefficients_.has_value(); }
    /// Present iff is_local().
    const std::optional<MachineCoefficients> &coefficients() const { return coefficients_; }

    /// Reduced state of one clone pair for a two-qubit input.
    DensityOperator apply(const DensityOperator &rho_in) const;

   private:
    Machine(std::string name, MachineKind kind, std::optional<MachineCoefficients> coefficients);

    std::string name_;
    MachineKind kind_;
    std::optional<MachineCoefficients> coefficients_;
};

namespace presets {
Machine local_bh();
Machine universal();
Machine one_pauli_like();
Machine two_pauli_like();
Machine nonlocal_bh();
}  // namespace presets

/// The five named machines in a fixed order.
std::span<const Machine> machine_registry();
std::optional<Machine> find_machine(std::string_view name);
std::string machine_names(std::string_view separator = ", ");

/// Requires c = 0.
ShrinkFactors single_qubit_shrink(const MachineCoefficients &m);

/// Single-qubit clone state (2x2 input, 2x2 output) via the Bloch map.
DensityOperator apply_single_qubit_cloner(const MachineCoefficients &m, const DensityOperator &rho_in);

/// Clone-pair state (Λ⊗Λ)(rho_in) computed in Bloch space:
/// x'_i = λ_i x_i, y'_i = λ_i y_i, t'_ij = λ_i λ_j t_ij with
/// λ = (2|a||b|, 2|a||b|, |a|^2). Requires c = 0 and mu = 4.
DensityOperator apply_local_cloner(const MachineCoefficients &m, const DensityOperator &rho_in);

/// 0.6 rho + 0.1 I, the M = 4 B-H clone reduction.
DensityOperator apply_nonlocal_bh(const DensityOperator &rho_in);

/// The 8x2 isometry V with V|i> = U|i>|b>|X> for one side. Output index
/// ordering is (clone 1, clone 2, ancilla), with ancilla basis |A> = |0>,
/// |A_perp> = |1> and |B> = |A'> = |A_perp>, |B'> = |A>.
ComplexMatrix cloner_isometry(const MachineCoefficients &m);

/// Six-qubit state (V⊗V)(alpha|00> + beta|11>), ordered
/// (a1, a2, ancilla_A, b1, b2, ancilla_B).
PureState full_unitary_state(const MachineCoefficients &m, const PureSchmidtState &s);

/// Reduced state of clone pair `pair` (0 -> a1 b1, 1 -> a2 b2) of a
/// full_unitary_state.
DensityOperator clone_pair_state(const PureState &full_state, int pair);

/// Explicit-unitary reference for apply_local_cloner: builds the six-qubit
/// state and traces out both ancillas and the second clone pair.
DensityOperator full_unitary_oracle(const MachineCoefficients &m, const PureSchmidtState &s);

double machine_fidelity(const Machine &machine, const PureSchmidtState &s);
double machine_fidelity(const MachineCoefficients &m, const PureSchmidtState &s);

/// Integral of machine_fidelity over alpha^2 in [0, 1] (adaptive Simpson).
double average_fidelity(const Machine &machine);

}  // namespace qclone
