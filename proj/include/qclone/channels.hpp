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

#include <array>

#include "qclone/matrix.hpp"
#include "qclone/states.hpp"

namespace qclone {

/// Weights of the two-qubit Pauli channel
///
///   rho -> s rho + sum_i p_i (σ_i⊗I) rho (σ_i⊗I) + sum_i q_i (I⊗σ_i) rho (I⊗σ_i)
///              + sum_ij t_ij (σ_i⊗σ_j) rho (σ_i⊗σ_j)
///
/// stored as a single 4x4 table w[a][b] over σ_a⊗σ_b (index 0 = identity):
/// w[0][0] = s, w[i][0] = p_i, w[0][j] = q_j, w[i][j] = t_ij.
class PauliChannelParams {
   public:
    using Table = std::array<std::array<double, 4>, 4>;

    /// Requires nonnegative weights summing to 1 within 1e-12.
    explicit PauliChannelParams(const Table &weights);
    PauliChannelParams(double s, const std::array<double, 3> &p, const std::array<double, 3> &q,
                       const std::array<std::array<double, 3>, 3> &t);

    double s() const { return w_[0][0]; }
    double p(int i) const { return w_[i][0]; }
    double q(int j) const { return w_[0][j]; }
    double t(int i, int j) const { return w_[i][j]; }
    const Table &weights() const { return w_; }

   private:
    Table w_;
};

DensityOperator apply_pauli_channel(const PauliChannelParams &params, const DensityOperator &rho);

/// s on the identity, (1 - s)/3 on each of σ3⊗I, I⊗σ3, σ3⊗σ3.
PauliChannelParams one_pauli(double s);

/// s on the identity, (1 - s)/8 on each of the eight non-identity products
/// built from {I, σ1, σ3}.
PauliChannelParams two_pauli(double s);

/// <psi| Λ(|psi><psi|) |psi> computed by applying the channel.
double channel_fidelity(const PauliChannelParams &params, const PureSchmidtState &state);

/// 1 + (8/3)(s - 1) α²β².
double one_pauli_fidelity_closed(double s, const PureSchmidtState &state);
/// (3 + 5s - 4(1 - s) α²β²) / 8.
double two_pauli_fidelity_closed(double s, const PureSchmidtState &state);

}  // namespace qclone
